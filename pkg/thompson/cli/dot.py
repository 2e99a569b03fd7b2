"""Tree pair diagrams in Graphviz DOT."""

from thompson.algebra.words import SimpleWord
from thompson.automorphism.symbol import Automorphism


def _node_id(side: str, word: SimpleWord) -> str:
    return "_".join([f"{side}{word.generator}", *map(str, word.path)])


def _forest_lines(side: str, labels: dict[SimpleWord, str]) -> list[str]:
    nodes: set[SimpleWord] = set()
    for leaf in labels:
        nodes.update(leaf.prefixes())
    lines = []
    for node in sorted(nodes):
        label = labels.get(node, f"x{node.generator}" if not node.path else "")
        shape = "plaintext" if node in labels else "point" if node.path else "box"
        lines.append(f'    {_node_id(side, node)} [label="{label}", shape={shape}];')
    for node in sorted(nodes):
        if node.path:
            lines.append(f"    {_node_id(side, node.parent())} -> {_node_id(side, node)};")
    return lines


def emit_dot(psi: Automorphism) -> str:
    """Domain and range forests of psi with matching leaf numbers.

    Domain leaves are numbered 1..|Y| in forest order and each range leaf
    carries the number of its preimage.
    """
    domain_labels: dict[SimpleWord, str] = {}
    range_labels: dict[SimpleWord, str] = {}
    for i, (y, z) in enumerate(psi.pairs(), start=1):
        assert isinstance(z, SimpleWord)
        domain_labels[y] = range_labels[z] = str(i)

    lines = ["digraph automorphism {", "  subgraph cluster_domain {", '    label="domain";']
    lines += _forest_lines("d", domain_labels)
    lines += ["  }", "  subgraph cluster_range {", '    label="range";']
    lines += _forest_lines("r", range_labels)
    lines += ["  }", "}"]
    return "\n".join(lines) + "\n"
