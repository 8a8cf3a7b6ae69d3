"""The parameter grid the acceptance suite sweeps.

n runs over 0..5, shift steps over {1, 1/2, -1/3}, deformations over
{2, 1/2, 3/5}, and (k, r) over {(1,1), (2,1), (2,2), (3,2)} where each is
applicable.  Two-step families pair each delta with the next grid value so
unequal steps are exercised; the deformed family runs both embeddings.
"""

from .scalars import rat

NS = tuple(range(6))
DELTAS = (rat(1), rat(1, 2), rat(-1, 3))
QS = (rat(2), rat(1, 2), rat(3, 5))
KR_PAIRS = ((1, 1), (2, 1), (2, 2), (3, 2))
RS = (1, 2, 3)
KS = (2, 3)


def acceptance_grid(small: bool = False):
    """Yield (rep_id, params) over the full acceptance grid.

    small=True picks one representative instance per family for quick runs.
    """
    if small:
        yield from [
            ("sl2_standard", {"n": rat(3)}),
            ("sl2_translated", {"n": rat(3), "delta": rat(1, 2)}),
            ("sl2_oscillator", {"n": rat(3)}),
            ("sl2_metaplectic", {}),
            ("sl2_clifford", {}),
            ("sl2_vector_field", {}),
            ("sl3_fock", {"n": rat(2)}),
            ("sl3_translated", {"n": rat(2), "delta1": rat(1), "delta2": rat(1, 2)}),
            ("sl3_seven", {"m": rat(1), "n": rat(2)}),
            ("gl2_semidirect", {"r": rat(2), "n": rat(2)}),
            ("glk", {"k": rat(3), "n": rat(2)}),
            ("osp22", {"n": rat(3)}),
            ("osp22_translated", {"n": rat(2), "delta": rat(1)}),
            ("osp22_metaplectic", {}),
            ("gl_super", {"k": rat(2), "r": rat(1), "n": rat(2)}),
            ("sl2q", {"alpha": rat(2), "q": rat(2)}),
        ]
        return
    for n in NS:
        yield "sl2_standard", {"n": rat(n)}
    for n in NS:
        for d in DELTAS:
            yield "sl2_translated", {"n": rat(n), "delta": d}
    for n in NS:
        yield "sl2_oscillator", {"n": rat(n)}
    yield "sl2_metaplectic", {}
    yield "sl2_clifford", {}
    yield "sl2_vector_field", {}
    for n in NS:
        yield "sl3_fock", {"n": rat(n)}
    for n in NS:
        for i, d in enumerate(DELTAS):
            yield "sl3_translated", {"n": rat(n), "delta1": d,
                                     "delta2": DELTAS[(i + 1) % len(DELTAS)]}
    for n in NS:
        for m in DELTAS:  # second rational parameter swept over the same values
            yield "sl3_seven", {"m": m, "n": rat(n)}
    for n in NS:
        for r in RS:
            yield "gl2_semidirect", {"r": rat(r), "n": rat(n)}
    for n in NS:
        for k in KS:
            yield "glk", {"k": rat(k), "n": rat(n)}
    for n in NS:
        yield "osp22", {"n": rat(n)}
    for n in NS:
        for d in DELTAS:
            yield "osp22_translated", {"n": rat(n), "delta": d}
    yield "osp22_metaplectic", {}
    for k, r in KR_PAIRS:
        for n in NS:
            yield "gl_super", {"k": rat(k), "r": rat(r), "n": rat(n)}
    for alpha in NS:
        for q in QS:
            yield "sl2q", {"alpha": rat(alpha), "q": q}
            yield "sl2q", {"alpha": rat(alpha), "q": q, "delta": rat(1)}
