"""
Barycentric neighbours and the generated graph
==============================================

A neighbour ``j`` of node ``i`` survives into the generated graph only when
``j`` closes a triangle with two other neighbours of ``i``. Here we build a
small network by hand and watch which edges survive.
"""

from localizability import barycentric_neighbors, build_network, generated_graph

# A "kite": nodes 0-3 form K4, node 4 hangs off 3, node 5 bridges 3 and 4.
edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (4, 6)]
net = build_network(edges, anchor_ids={0, 1, 2}, node_count=7)

for i in range(net.node_count):
    print(f"node {i}: neighbours {net.neighbors[i]} -> barycentric {sorted(barycentric_neighbors(net, i))}")

ga = generated_graph(net)
print()
print(f"{net.edge_count} edges in G, {ga.edge_count} kept in G_A")
print("dropped:", sorted(net.edges - ga.edges))

# The triangle 3-4-5 is not enough on its own. Seen from node 3, neighbour 4
# needs two further neighbours of 3 adjacent to it and to each other, but
# only 5 qualifies; a triangle counts only when it sits inside a 4-clique
# together with the centre node.
