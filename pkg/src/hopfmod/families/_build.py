"""Assemble Hopf structure on a word basis from data on generators."""

from __future__ import annotations

from typing import Callable, Sequence

from ..cyclo import CyclotomicField
from ..hopf import HopfAlgebra


def hopf_from_generators(
    F: CyclotomicField,
    labels: Sequence[str],
    product_rule: Callable,
    unit_index: int,
    words: Sequence[Sequence[int]],
    gen_comult: dict,
    gen_counit: dict,
    gen_antipode: dict,
    comult_override: Callable[[int], dict] | None = None,
    name: str = "H",
    bind: Callable[[HopfAlgebra], None] | None = None,
) -> HopfAlgebra:
    """Build a HopfAlgebra whose basis element b equals the product of the
    generator indices ``words[b]`` (left to right, coefficient exactly 1).

    Delta and epsilon are extended multiplicatively, S anti-multiplicatively.
    ``comult_override`` may supply Delta(b) from a closed formula instead.
    """
    d = len(labels)
    one = F.one
    unit = {unit_index: one}
    H = HopfAlgebra(F, labels, unit, [[] for _ in range(d)], [F.zero] * d,
                    [[] for _ in range(d)], product_rule=product_rule, name=name)
    if bind is not None:
        bind(H)
    gens = sorted(gen_comult)
    H.generators = gens
    # words must be prefix-closed
    lookup = {tuple(w): b for b, w in enumerate(words)}
    cert = {}
    for b, w in enumerate(words):
        if w:
            cert[b] = (lookup[tuple(w[:-1])], w[-1])
    H.words = cert

    # build along word prefixes so each structure value costs one multiplication
    comult: list = [None] * d
    counit: list = [None] * d
    antipode: list = [None] * d
    comult[unit_index] = {(unit_index, unit_index): one}
    counit[unit_index] = one
    antipode[unit_index] = dict(unit)
    order = sorted(range(d), key=lambda b: len(words[b]))
    for b in order:
        if b == unit_index:
            continue
        p, g = cert[b]
        if comult_override is None:
            comult[b] = H.tmul(comult[p], gen_comult[g])
        counit[b] = counit[p] * F.coerce(gen_counit[g])
        antipode[b] = H.mul(gen_antipode[g], antipode[p])
    if comult_override is not None:
        comult = [comult_override(b) for b in range(d)]
    H.comult = [tuple((k, v) for k, v in c.items() if v) for c in comult]
    H.counit = counit
    H.antipode = [tuple((k, v) for k, v in s.items() if v) for s in antipode]
    return H

