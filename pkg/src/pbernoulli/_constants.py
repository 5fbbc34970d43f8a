from typing import NamedTuple


class _ROUTE_KEYS_NT(NamedTuple):
    EXPLICIT: str = "explicit"
    RECURRENCE: str = "recurrence"
    STIRLING1: str = "stirling1"
    EGF: str = "egf"


class _IDENTITY_KEYS_NT(NamedTuple):
    THEOREM1: str = "theorem1"
    DISPLAYED_EGF: str = "displayed-egf"
    THEOREM2: str = "theorem2"
    COROLLARY1: str = "corollary1"
    SPECIAL_SUMS: str = "special-sums"
    COROLLARY2: str = "corollary2"
    EQ12: str = "eq12"
    PROPOSITION: str = "proposition"
    RECURRENCE_ROUTE: str = "recurrence-route"
    STIRLING1_ROUTE: str = "stirling1-route"
    RECURRENCE_LAW: str = "recurrence-law"
    STIRLING2_EGF: str = "stirling2-egf"
    GEOMETRIC_EGF: str = "geometric-egf"
    BERNOULLI_ORACLE: str = "bernoulli-oracle"


class _SELECTOR_KEYS_NT(NamedTuple):
    ALL: str = "all"
    THEOREM1: str = "theorem1"
    THEOREM2: str = "theorem2"
    COROLLARY1: str = "corollary1"
    COROLLARY2: str = "corollary2"
    SPECIAL_SUMS: str = "special-sums"
    EQ12: str = "eq12"
    PROPOSITION: str = "proposition"
    ROUTES: str = "routes"
    SCAFFOLDING: str = "scaffolding"


class _REPORT_KEYS_NT(NamedTuple):
    IDENTITY: str = "identity"
    ALL_PASS: str = "all_pass"
    CELLS: str = "cells"
    PARAMS: str = "params"
    LHS: str = "lhs"
    RHS: str = "rhs"
    PASS: str = "pass"
    NOTES: str = "notes"


class _EXIT_CODES_NT(NamedTuple):
    SUCCESS: int = 0
    FALSIFIED: int = 1
    USAGE: int = 2


ROUTE_KEYS = _ROUTE_KEYS_NT()
IDENTITY_KEYS = _IDENTITY_KEYS_NT()
SELECTOR_KEYS = _SELECTOR_KEYS_NT()
REPORT_KEYS = _REPORT_KEYS_NT()
EXIT_CODES = _EXIT_CODES_NT()
