"""Pure-Python kernels for permutation arithmetic on word indices.

A permutation at level L is a list of length 2**L sending each word
index to its image.  These loops dominate the exhaustive rank-3 sweep;
a compiled twin (_kernels.pyx) with the same signatures is preferred at
import time when available.
"""

from __future__ import annotations


def compose_perm(p: list, q: list) -> list:
    """(p after q): x -> p[q[x]]."""
    return [p[v] for v in q]


def invert_perm(p: list) -> list:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return out


def is_identity_perm(p: list) -> bool:
    return all(i == v for i, v in enumerate(p))


def pad_suffix_perm(p: list, extra: int) -> list:
    """Extend by identity legs at the end: p tensor id."""
    mask = (1 << extra) - 1
    return [(p[x >> extra] << extra) | (x & mask) for x in range(len(p) << extra)]


def shift_prefix_perm(p: list, level: int, shift: int, total: int) -> list:
    """id (shift legs) tensor p tensor id, sized to the total level."""
    rest = total - shift - level
    if rest < 0:
        raise ValueError("total level too small for shifted permutation")
    mrest = (1 << rest) - 1
    mlev = (1 << level) - 1
    out = []
    for x in range(1 << total):
        t = x & mrest
        i = (x >> rest) & mlev
        h = x >> (rest + level)
        out.append((((h << level) | p[i]) << rest) | t)
    return out


def cocycle_perm(p: list, level: int, steps: int) -> list:
    """u . phi(u) ... phi^{steps-1}(u) at level steps + level - 1."""
    total = steps + level - 1
    out = pad_suffix_perm(p, total - level)
    for j in range(1, steps):
        out = compose_perm(out, shift_prefix_perm(p, level, j, total))
    return out


def _find(parent: list, a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _union(parent: list, a: int, b: int) -> None:
    ra, rb = _find(parent, a), _find(parent, b)
    if ra != rb:
        parent[rb] = ra


def commutant_labels(p: list, level: int, k: int) -> tuple[list, int]:
    """Solve x = u phi(x) u* for x at level k, u the level-`level` perm.

    Unknowns are the 4**k coordinates of x.  Both sides compared at
    level m = max(k + 1, level) have at most one source coordinate per
    position, so every equation is c_s = c_t or c_s = 0 and union-find
    solves the system.  Returns per-unknown component roots (-1 when
    forced to zero) and the count of free components.
    """
    m = max(k + 1, level)
    ptil = pad_suffix_perm(p, m - level)
    pinv = invert_perm(ptil)
    nk = 1 << k
    n_unknown = nk * nk
    zero = n_unknown
    parent = list(range(n_unknown + 1))
    mask_mid = nk - 1
    mask_suf = (1 << (m - k)) - 1
    mask_tail = (1 << (m - k - 1)) - 1
    midshift = m - k - 1
    top = m - 1
    for t in range(n_unknown):
        ia = t >> k
        ib = t & mask_mid
        # positions where the plain embedding of x is nonzero
        for h in range(1 << (m - k)):
            gp = pinv[(ia << (m - k)) | h]
            dp = pinv[(ib << (m - k)) | h]
            if (gp >> top) == (dp >> top) and (gp & mask_tail) == (dp & mask_tail):
                src = (((gp >> midshift) & mask_mid) << k) | (
                    (dp >> midshift) & mask_mid
                )
                _union(parent, t, src)
            else:
                _union(parent, t, zero)
        # positions where u phi(x) u* is nonzero but the embedding is not
        for i in range(2):
            for g in range(1 << midshift):
                gam = ptil[(i << top) | (ia << midshift) | g]
                det = ptil[(i << top) | (ib << midshift) | g]
                if (gam & mask_suf) != (det & mask_suf):
                    _union(parent, t, zero)
    zero_root = _find(parent, zero)
    labels = []
    roots = set()
    for t in range(n_unknown):
        r = _find(parent, t)
        if r == zero_root:
            labels.append(-1)
        else:
            labels.append(r)
            roots.add(r)
    return labels, len(roots)
