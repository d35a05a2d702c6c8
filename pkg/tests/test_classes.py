import unittest

from motivicpv.arrangement import edge_lattice, generic_arrangement, parse_arrangement, product_arrangement
from motivicpv.classes import (
    L,
    affine_complement_class,
    arrangement_union_class,
    chain_stratum_class,
    concentrated_sum,
    euler_characteristic,
    lpoly_to_json,
    point_count_complement,
    projective_complement_class,
    projective_space_class,
    relative_stratum_class,
    resolution_class,
    superchain_sum,
    union_class,
)
from motivicpv.conformance.corpus import boolean, essential_braid, pencil
from motivicpv.errors import NotAChain, NotIntersectionClosed


def edge_on(arrangement, containing):
    return next(e for e in edge_lattice(arrangement).S if e.containing == tuple(containing))


def factor_edge(arrangement, edge, split):
    normals = [arrangement.normals[i] for i in edge.containing]
    return all(not any(v[split:]) for v in normals) or all(not any(v[:split]) for v in normals)


class TestComplements(unittest.TestCase):

    def test_three_lines(self):
        a = pencil(3)
        self.assertEqual(affine_complement_class(a), L**2 - 3 * L + 2)
        self.assertEqual(projective_complement_class(a), L - 2)
        self.assertEqual(euler_characteristic(projective_complement_class(a)), -1)

    def test_boolean(self):
        a = boolean(3)
        self.assertEqual(projective_complement_class(a), (L - 1) ** 2)
        self.assertEqual(euler_characteristic(projective_complement_class(a)), 0)

    def test_point_counts(self):
        for a, p in ((pencil(3), 11), (pencil(4), 13), (boolean(3), 5)):
            affine = affine_complement_class(a)
            expected = sum(int(c) * p ** int(m[0]) for m, c in affine.terms())
            self.assertEqual(point_count_complement(a, p), expected)

    def test_json(self):
        doc = lpoly_to_json(L - 2)
        self.assertEqual(doc["terms"], [[0, -2], [1, 1]])


class TestResolution(unittest.TestCase):

    def test_p1_is_untouched(self):
        for k in (2, 3, 5):
            self.assertEqual(resolution_class(pencil(k)), L + 1)

    def test_blown_up_plane(self):
        # P^2 blown up in the three coordinate points
        self.assertEqual(resolution_class(boolean(3)), L**2 + 4 * L + 1)

    def test_constant_term_is_one(self):
        res = resolution_class(essential_braid())
        self.assertEqual(dict(res.terms()).get((0,)), 1)

    def test_chain_strata(self):
        a = boolean(3)
        line = edge_on(a, (1, 2))
        plane = edge_on(a, (1,))
        self.assertEqual(chain_stratum_class(a, [plane]), L - 1)
        self.assertEqual(chain_stratum_class(a, [line]), L - 1)
        self.assertEqual(chain_stratum_class(a, [line, plane]), 1)
        self.assertEqual(chain_stratum_class(a, [plane], closed=True), L + 1)

    def test_not_a_chain(self):
        a = boolean(3)
        with self.assertRaises(NotAChain):
            chain_stratum_class(a, [edge_on(a, (0,)), edge_on(a, (1,))])
        with self.assertRaises(NotAChain):
            chain_stratum_class(a, [edge_on(a, (1,)), edge_on(a, (1, 2))])

    def test_relative_stratum(self):
        a = boolean(3)
        plane = edge_on(a, (1,))
        line = edge_on(a, (1, 2))
        self.assertEqual(relative_stratum_class(a, plane, ()), chain_stratum_class(a, [plane]))
        self.assertEqual(relative_stratum_class(a, plane, (line,)), chain_stratum_class(a, [line, plane]))

    def test_concentrated_sum(self):
        a = pencil(3)
        # (L - 2) + 1 * (1 - L)
        self.assertEqual(concentrated_sum(a, edge_on(a, (0,))), -1)


class TestStrataIdentities(unittest.TestCase):

    SMALL = (
        pencil(3),
        pencil(4),
        boolean(3),
        generic_arrangement(3, 4),
        product_arrangement(pencil(3), boolean(1)),
        product_arrangement(boolean(1), pencil(3)),
        parse_arrangement(3, [[1, 0, 0], [0, 1, 0]]),
    )

    def test_closed_stratum_is_sum_of_open_superchains(self):
        for a in self.SMALL:
            for chain in edge_lattice(a).chains():
                self.assertEqual(superchain_sum(a, chain), chain_stratum_class(a, chain, closed=True), (a, chain))

    def test_stratum_factorization(self):
        for a in self.SMALL:
            lattice = edge_lattice(a)
            for w in lattice.S:
                for chain in lattice.chains(lattice.below(w)):
                    self.assertEqual(
                        relative_stratum_class(a, w, chain),
                        chain_stratum_class(a, chain + (w,)),
                        (a, chain, w),
                    )

    def test_concentrated_sum_vanishes_on_factor_edges(self):
        for first, second in ((pencil(3), boolean(1)), (pencil(3), boolean(2))):
            a = product_arrangement(first, second)
            split = first.ambient_dim
            factor_edges = [w for w in edge_lattice(a).S if factor_edge(a, w, split)]
            self.assertTrue(factor_edges)
            for w in factor_edges:
                self.assertEqual(concentrated_sum(a, w), 0, w)

    def test_concentrated_sum_on_mixed_edges(self):
        a = product_arrangement(pencil(3), boolean(1))
        mixed = [w for w in edge_lattice(a).S if not factor_edge(a, w, 2)]
        # pencil line x {0}: [U] + [E open] (1 - L) = (L - 1)(L - 2) - (L - 1)^2
        self.assertEqual(len(mixed), 3)
        for w in mixed:
            self.assertEqual(concentrated_sum(a, w), 1 - L)


class TestUnions(unittest.TestCase):

    def test_points_on_a_line(self):
        self.assertEqual(union_class([[[1, 0]], [[0, 1]]]), 2)
        self.assertEqual(arrangement_union_class(pencil(3)), 3)

    def test_union_and_complement(self):
        for a in (pencil(4), boolean(3), essential_braid()):
            self.assertEqual(
                projective_space_class(a.n) - arrangement_union_class(a),
                projective_complement_class(a),
            )

    def test_triangle(self):
        self.assertEqual(arrangement_union_class(boolean(3)), 3 * L)

    def test_not_intersection_closed(self):
        with self.assertRaises(NotIntersectionClosed):
            union_class([[[1, 0, 0], [0, 1, 0]], [[1, 0, 0], [0, 0, 1]], [[0, 1, 1]]])


if __name__ == "__main__":
    unittest.main()
