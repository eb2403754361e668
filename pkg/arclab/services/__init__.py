"""
Services package containing the computational logic.

- arc_service.py: MDS checks, constructions, dual arcs, tangent census
- tangent_service.py: tangent functions and Segre products
- identity_service.py: verifiers of the lemmas
- config_service.py: enumeration and sampling of lemma configurations
- suite_service.py: lemma suites and acceptance profiles
- search_service.py: maximum arc search
"""
