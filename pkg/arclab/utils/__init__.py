"""
Utility functions package.

- gf.py: finite field arithmetic on integer codes
- linalg.py: exact linear algebra over the field
- formats.py: matrix text and JSON arc files
"""
