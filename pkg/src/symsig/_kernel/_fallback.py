"""Pure-Python kernel backend.

Same contract as the compiled backend in ``_speedups.pyx``; arbitrary
precision, so no overflow guards are needed.  Selected automatically when
the extension is unavailable, or explicitly via SYMSIG_KERNEL=python.
"""

from __future__ import annotations


def sl2_multiplicity_series(trace_mats, proj_mats, group_order, qmax):
    """Per-q multiplicity vectors for symmetric powers of a det-1 rep.

    trace_mats: one d x d integer matrix per conjugacy class, the matrix of
    multiplication by the class trace on the power basis of the cyclotomic
    field.  proj_mats[i][c]: matrix of multiplication by
    class_size * conj(chi_i(class)).  The recurrence
    s_q = trace * s_(q-1) - s_(q-2) runs per class on coefficient vectors;
    projections must land in group_order * Z * (basis vector 0), which is
    checked coordinate by coordinate.
    """
    n_classes = len(trace_mats)
    dim = len(trace_mats[0])
    n_irr = len(proj_mats)
    s_prev = [[0] * dim for _ in range(n_classes)]
    s_cur = [[0] * dim for _ in range(n_classes)]
    for row in s_cur:
        row[0] = 1
    out = []
    for q in range(qmax + 1):
        if q > 0:
            s_next = []
            for c in range(n_classes):
                mat = trace_mats[c]
                vec = s_cur[c]
                old = s_prev[c]
                s_next.append(
                    [
                        sum(mat[i][j] * vec[j] for j in range(dim)) - old[i]
                        for i in range(dim)
                    ]
                )
            s_prev, s_cur = s_cur, s_next
        alphas = []
        for i in range(n_irr):
            mats = proj_mats[i]
            for k in range(dim):
                total = 0
                for c in range(n_classes):
                    row = mats[c][k]
                    vec = s_cur[c]
                    total += sum(row[j] * vec[j] for j in range(dim))
                if k == 0:
                    head = total
                elif total != 0:
                    raise ValueError(
                        f"multiplicity is not rational at q={q}, irreducible {i}"
                    )
            if head % group_order != 0 or head < 0:
                raise ValueError(
                    f"multiplicity is not a nonnegative integer at q={q}, irreducible {i}"
                )
            alphas.append(head // group_order)
        out.append(alphas)
    return out


def weight_slice_counts(n, w1, w2, qmax):
    """Histogram of monomial weights on each degree slice.

    Row q counts the monomials u^x v^(q-x), 0 <= x <= q, by the residue
    x*w1 + (q-x)*w2 mod n.  Direct enumeration of every slice.
    """
    a = w1 % n
    b = w2 % n
    step = a - b
    out = []
    for q in range(qmax + 1):
        row = [0] * n
        r = (b * q) % n
        for _ in range(q + 1):
            row[r] += 1
            r += step
            if r >= n:
                r -= n
            elif r < 0:
                r += n
        out.append(row)
    return out


def weight_slice_count(n, w1, w2, t, q):
    """Single slice, single residue; enumeration over x."""
    a = w1 % n
    b = w2 % n
    t = t % n
    count = 0
    for x in range(q + 1):
        if (a * x + b * (q - x)) % n == t:
            count += 1
    return count
