import itertools

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def naive_svt(shape, rho):
    """Every assignment of 1..m to cells of the right sizes, filtered by the
    quadrant rule written out directly.  Only usable for m <= 10 or so."""
    cells = [(i, j) for i, n in enumerate(shape) for j in range(n)]
    sizes = [rho[i][j] for i, j in cells]
    m = sum(sizes)
    labels = [k for k, s in enumerate(sizes) for _ in range(s)]
    out = set()
    for perm in set(itertools.permutations(labels)):
        content = {c: [] for c in cells}
        for x, k in enumerate(perm, start=1):
            content[cells[k]].append(x)
        good = all(
            max(content[c]) < min(content[d])
            for c in cells for d in cells
            if c != d and c[0] <= d[0] and c[1] <= d[1] and content[c] and content[d]
        )
        if good:
            out.add(tuple(tuple(tuple(content[(i, j)]) for j in range(n)) for i, n in enumerate(shape)))
    return out
