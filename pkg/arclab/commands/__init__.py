"""
Command handlers package.

One module per subcommand, each exposing register(subparsers):
- field.py: field parameters and modulus
- construct.py: classical arcs
- mds_check.py: arc property check with witness
- tangents.py: tangent forms, values and census
- verify.py: lemma suites
- search.py: maximum arc search
- dual.py: dual arc
- suite.py: acceptance profiles
"""

from arclab.commands import construct, dual, field, mds_check, search, suite, tangents, verify

COMMANDS = (field, construct, mds_check, tangents, verify, search, dual, suite)

__all__ = ["COMMANDS"]
