"""Gallery: evenness, bipartiteness and facet colorings across small polytopes.

For a simple n-polytope the following are equivalent: every 2-face has an
even number of vertices, the vertex-edge graph is bipartite, and the facets
admit a proper coloring with n colors.  This script tabulates all three on a
small zoo and shows a minimal coloring for each.
"""

from qtoric import cube, facet_chromatic, polygon, prism, simplex

zoo = [cube(n) for n in (2, 3, 4)]
zoo += [simplex(n) for n in (2, 3)]
zoo += [polygon(k) for k in (5, 6, 8)]
zoo += [prism(3), prism(4), cube(2).product(simplex(2))]

print(f"{'polytope':<22}{'n':>3}{'m':>4}{'V':>5}  even  bipartite  d_min  n-colorable")
for p in zoo:
    even = p.is_even()
    bip = p.is_vertex_graph_bipartite()
    d_min, coloring = facet_chromatic(p)
    print(f"{p.name:<22}{p.dim:>3}{p.facet_count:>4}{len(p.vertices):>5}"
          f"  {str(even):<5} {str(bip):<10} {d_min:>4}  {d_min == p.dim}")

print()
p = cube(3)
d_min, coloring = facet_chromatic(p)
print(f"minimal coloring of {p.name}: opposite facets share a color")
for color, facets in enumerate(coloring.color_classes(), start=1):
    print(f"  color {color}: {[p.facet_names[i] for i in facets]}")
