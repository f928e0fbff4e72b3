"""Hand-built instances that drive specific pipeline branches."""
from evencycles.graph import LabeledGraph


def segment_cycle(n=13, k=2):
    """Odd cycle with A on every second vertex and z next to the others:
    the block has 2k+ segments reaching z."""
    z = n
    edges = [(i, (i + 1) % n) for i in range(n)] + [(z, i) for i in range(1, n - 1, 2)]
    return LabeledGraph.from_edges(n + 1, edges, A=list(range(0, n - 1, 2)), z=z)


def string_ladder(k=1, nblocks=2, nstrings=1, thin_end=False):
    """Strings b_0 B_1 b_1 .. B_l b_l whose blocks are bundles of 10k+1
    b_{i-1}-b_i paths: one of length 2 through an A-vertex, the rest of
    length 3, so every cycle through A inside a block is odd.  The ends of
    consecutive strings share a K_{2,10k+1}-like connector block whose middle
    vertices see z; the two outer ends hang on such a block too, or with
    ``thin_end`` the first one hangs on a single edge to a z-neighbour.
    Returns the graph and the cutvertex list of every string."""
    npaths = 10 * k + 1
    edges, A, mids = [], [], []
    counter = iter(range(10 ** 6))

    def connector(*ends):
        if len(ends) == 1:
            ends += (next(counter),)
        xs = [next(counter) for _ in range(npaths)]
        for b in ends:
            edges.extend((b, x) for x in xs)
        mids.extend(xs)

    strings = []
    for _ in range(nstrings):
        cuts = [next(counter) for _ in range(nblocks + 1)]
        for b0, b1 in zip(cuts, cuts[1:]):
            a = next(counter)
            A.append(a)
            edges += [(b0, a), (a, b1)]
            for _ in range(npaths - 1):
                x, y = next(counter), next(counter)
                edges += [(b0, x), (x, y), (y, b1)]
        strings.append(cuts)
    first = strings[0][0]
    if thin_end:
        x = next(counter)
        edges.append((first, x))
        mids.append(x)
    else:
        connector(first)
    for left, right in zip(strings, strings[1:]):
        connector(left[-1], right[0])
    connector(strings[-1][-1])
    z = next(counter)
    edges += [(z, x) for x in mids]
    G = LabeledGraph.from_edges(z + 1, edges, A=A, z=z)
    return (G, strings[0]) if nstrings == 1 else (G, strings)


def triangle_legs(nlegs=3, centre_block=False):
    """Legs hanging off a centre: each leg is a triangle (c, x, y) with
    y in A and x adjacent to z.  The centre is a cutvertex or, with
    ``centre_block``, a 5-cycle carrying the legs on three of its vertices."""
    edges, A = [], []
    if centre_block:
        ring = list(range(5))
        edges += [(i, (i + 1) % 5) for i in ring]
        anchors = [0, 1, 3][:nlegs]
        nxt = 5
    else:
        anchors = [0] * nlegs
        nxt = 1
    xs = []
    for c in anchors:
        x, y = nxt, nxt + 1
        nxt += 2
        edges += [(c, x), (x, y), (y, c)]
        A.append(y)
        xs.append(x)
    z = nxt
    edges += [(z, x) for x in xs]
    return LabeledGraph.from_edges(z + 1, edges, A=A, z=z)


def triangle_chain(m=12):
    """Triangles (c_{i-1}, c_i, w_i) in a chain; every w_i is in A and
    adjacent to z."""
    edges, A = [], []
    nxt = m + 1
    for i in range(1, m + 1):
        w = nxt
        nxt += 1
        edges += [(i - 1, i), (i, w), (w, i - 1)]
        A.append(w)
    z = nxt
    edges += [(z, w) for w in A]
    return LabeledGraph.from_edges(z + 1, edges, A=A, z=z)
