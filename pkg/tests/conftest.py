"""Shared brute-force oracles.

These deliberately avoid the package's search code: they sweep every
labeling/subset with ``itertools`` and judge each candidate with the
definition-level validator (or a literal transcription of a definition),
so solver and DP results can be checked against an independent route.
"""

import itertools

from didom import Parameter, Variant, is_packing, validate, variant_of


def brute_minimum_labeling(d, variant):
    """(optimal value, list of all optimal labelings) by raw enumeration."""
    best = None
    optima = []
    for labels in itertools.product((0, 1, 2), repeat=d.order):
        if not validate(d, labels, variant):
            continue
        w = sum(labels)
        if best is None or w < best:
            best = w
            optima = [labels]
        elif w == best:
            optima.append(labels)
    return best, optima


def brute_minimum_set(d, variant):
    """(optimal size, list of all optimal sets) by raw subset enumeration."""
    for k in range(d.order + 1):
        hits = [
            frozenset(c)
            for c in itertools.combinations(range(d.order), k)
            if validate(d, frozenset(c), variant)
        ]
        if hits:
            return k, hits
    return None, []


def brute_maximum_packing(d):
    for k in range(d.order, -1, -1):
        hits = [
            frozenset(c)
            for c in itertools.combinations(range(d.order), k)
            if is_packing(d, frozenset(c))
        ]
        if hits:
            return k, hits
    return 0, [frozenset()]


def brute_value(d, parameter):
    """Optimal value for any parameter, via the matching brute oracle."""
    if parameter is Parameter.PACKING:
        return brute_maximum_packing(d)[0]
    variant = variant_of(parameter)
    if variant in (Variant.ROMAN, Variant.ITALIAN, Variant.TOTAL_ROMAN, Variant.TOTAL_ITALIAN):
        return brute_minimum_labeling(d, variant)[0]
    return brute_minimum_set(d, variant)[0]
