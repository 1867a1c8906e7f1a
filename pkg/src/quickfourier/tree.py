"""Decomposition trees for both transform recursions.

Each tree node is a signal from the taxonomy at some periodization.
Expanding a node applies the decomposition its algorithm uses at that
size: the node's *children* are the signals the recursion continues
into, and its *intermediates* are the transient signals formed along
the way (parity-split halves before relabelling, secant-converted
buffers) that the next step consumes immediately.

Storage audit: for every expanded node the children's stored-cell
totals (time and harmonic) are compared with the mother's.  The
improved recursion conserves both exactly at every node.  The classical
recursion conserves everywhere except the odd-harmonic cosine step,
whose secant conversion passes through the wider t1 signals: there the
children hold one extra time cell and one extra harmonic cell.

Node labels are assigned breadth-first: within each level, the outputs
of the previous level's nodes are numbered first, in order, then the
intermediates, in order, so s2,1 is always the first signal the first
decomposition recurses into.
"""

from dataclasses import dataclass, field

from .taxonomy import storage_sizes


@dataclass
class TreeNode:
    """One signal in a decomposition tree."""

    sig_type: str
    N: int
    role: str = "output"  # "output" (recursed into) or "intermediate"
    children: list = field(default_factory=list)
    intermediates: list = field(default_factory=list)
    level: int = 0
    pos: int = 0

    @property
    def ln(self):
        return storage_sizes(self.sig_type, self.N).ln

    @property
    def lk(self):
        return storage_sizes(self.sig_type, self.N).lk

    @property
    def label(self):
        return f"s{self.level},{self.pos}"

    @property
    def is_leaf(self):
        return not self.children


_ROOT_TYPE = {"cdft": "cx_tt", "rdft": "re_tt", "dct0": "dc_tt", "dst0": "ds_tt"}


def _expand(node, algorithm):
    """Attach children and intermediates per the algorithm's recursion."""
    t, N = node.sig_type, node.N

    def out(sig, n):
        return TreeNode(sig, n, "output")

    def mid(sig, n):
        return TreeNode(sig, n, "intermediate")

    if t == "cx_tt" and N >= 4:
        # one real transform over the real parts, one over the imaginary
        node.children = [out("re_tt", N), out("re_tt", N)]
    elif t == "re_tt" and N >= 4:
        # fold into a cosine and a sine component
        node.children = [out("dc_tt", N), out("ds_tt", N)]
    elif t == "dc_tt" and N >= 4:
        if algorithm == "classical":
            # harmonic-parity split; the even half lives on the halved grid
            node.children = [out("dc_tt", N // 2), out("dc_to", N)]
            node.intermediates = [mid("dc_te", N)]
        else:
            # time-parity split; the even half lives on the halved grid
            node.children = [out("dc_tt", N // 2), out("dc_ot", N)]
            node.intermediates = [mid("dc_et", N)]
    elif t == "ds_tt" and N >= 8:
        if algorithm == "classical":
            node.children = [out("ds_tt", N // 2), out("ds_to", N)]
            node.intermediates = [mid("ds_te", N)]
        else:
            node.children = [out("ds_tt", N // 2), out("ds_ot", N)]
            node.intermediates = [mid("ds_et", N)]
    elif t == "dc_to" and N >= 16:
        # classical odd harmonics: secant conversion widens into the t1
        # family, whose split then recurses on even and odd harmonics
        node.children = [out("dc_tt", N // 4), out("dc_to", N // 2)]
        node.intermediates = [mid("dc_t1e", N), mid("dc_t1t", N // 2),
                              mid("dc_te", N // 2)]
    elif t == "ds_to" and N >= 8:
        # classical odd sine harmonics: the centre sample splits off as a
        # one-cell signal and the rest converts onto the halved grid
        node.children = [out("ds_tt", N // 2), out("ds_e1o", N)]
        node.intermediates = [mid("ds_t1o", N), mid("ds_te", N)]
    elif t == "dc_ot" and N >= 8:
        node.children = [out("dc_ot", N // 2), out("dc_oo", N)]
        node.intermediates = [mid("dc_oe", N)]
    elif t == "ds_ot" and N >= 8:
        node.children = [out("ds_ot", N // 2), out("ds_oo", N)]
        node.intermediates = [mid("ds_oe", N)]
    elif t == "dc_oo" and N >= 16:
        # improved odd-odd: conversion lands on a same-size even-harmonic
        # signal, which halves and splits again before the recursion
        node.children = [out("dc_ot", N // 4), out("dc_oo", N // 2)]
        node.intermediates = [mid("dc_oe", N), mid("dc_ot", N // 2),
                              mid("dc_oe", N // 2)]
    elif t == "ds_oo" and N >= 16:
        node.children = [out("ds_ot", N // 4), out("ds_oo", N // 2)]
        node.intermediates = [mid("ds_oe", N), mid("ds_ot", N // 2),
                              mid("ds_oe", N // 2)]
    # anything else is a recursion base: a leaf
    for child in node.children:
        _expand(child, algorithm)


def build_tree(algorithm, transform, N):
    """Decomposition tree for one transform at periodization N."""
    if algorithm not in ("classical", "improved"):
        raise ValueError(f"algorithm must be classical or improved, got {algorithm!r}")
    if transform not in _ROOT_TYPE:
        raise ValueError(f"transform must be one of {sorted(_ROOT_TYPE)}")
    if N < 2 or N & (N - 1):
        raise ValueError(f"periodization must be a power of two >= 2, got {N}")
    if transform == "dst0" and N < 4:
        raise ValueError("the sine transform needs a periodization >= 4")
    root = TreeNode(_ROOT_TYPE[transform], N, "output")
    _expand(root, algorithm)
    _assign_labels(root)
    return root


def _assign_labels(root):
    root.level, root.pos = 1, 1
    frontier = [root]
    level = 2
    while frontier:
        outputs = [c for node in frontier for c in node.children]
        intermediates = [m for node in frontier for m in node.intermediates]
        for pos, node in enumerate(outputs + intermediates, start=1):
            node.level, node.pos = level, pos
        frontier = outputs
        level += 1


def iter_nodes(root):
    """All output nodes, depth first, mothers before children."""
    yield root
    for child in root.children:
        yield from iter_nodes(child)


@dataclass(frozen=True)
class StorageCheck:
    node_label: str
    sig_type: str
    N: int
    mother: tuple
    children_sum: tuple
    delta: tuple


def storage_checks(root):
    """Mother-versus-children stored-cell comparison for every expansion."""
    checks = []
    for node in iter_nodes(root):
        if node.is_leaf:
            continue
        sum_ln = sum(c.ln for c in node.children)
        sum_lk = sum(c.lk for c in node.children)
        checks.append(StorageCheck(node.label, node.sig_type, node.N,
                                   (node.ln, node.lk), (sum_ln, sum_lk),
                                   (sum_ln - node.ln, sum_lk - node.lk)))
    return checks


def conservation_violations(root, allow_t1_growth):
    """Checks whose delta is unexpected.

    With allow_t1_growth (the classical recursion), odd-harmonic cosine
    expansions are expected to grow by exactly one cell each way; every
    other expansion must conserve both totals.
    """
    bad = []
    for check in storage_checks(root):
        expected = (0, 0)
        if allow_t1_growth and check.sig_type == "dc_to":
            expected = (1, 1)
        if check.delta != expected:
            bad.append(check)
    return bad


def render_tree(root, algorithm, transform):
    """Plain-text dump of the tree with storage sizes."""
    lines = [f"{algorithm} {transform} N={root.N}"]

    def walk(node, prefix, is_last):
        branch = "" if node is root else ("`- " if is_last else "|- ")
        star = " *" if node.role == "intermediate" else ""
        lines.append(f"{prefix}{branch}{node.label}{star} {node.sig_type} "
                     f"N={node.N} ln={node.ln} lk={node.lk}")
        if node is root:
            child_prefix = prefix
        else:
            child_prefix = prefix + ("   " if is_last else "|  ")
        items = node.children + node.intermediates
        for i, item in enumerate(items):
            walk(item, child_prefix, i == len(items) - 1)

    walk(root, "", True)
    lines.append("* = intermediate signal, consumed within its mother's step")
    return "\n".join(lines)
