import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hbk import (DomainProductMismatch, GFamily, MalformedTable, ParseError,
                 PartialMultBiquandle, associated_gfamily, check_pmb_axioms, cyclic_group,
                 decode_pair, direct_product, encode_pair, factorizations,
                 is_group_decomposable, make_alexander, parse_pmb, pmb_from_gfamily,
                 serialize_pmb, symmetric_group, trivial_biquandle)
from hbk.pmb import find_exchanger, group_pmb

import corpus


def brute_force_decomposable(P):
    """Search every subset B of the carrier for a group with B×B inside D."""
    prod = P.prod
    covered = set()
    for r in range(1, P.n + 1):
        for block in itertools.combinations(range(P.n), r):
            square = set(itertools.product(block, repeat=2))
            if not square <= prod.keys() or not all(prod[p] in block for p in square):
                continue
            if any(prod[(prod[(a, b)], c)] != prod[(a, prod[(b, c)])]
                   for a, b, c in itertools.product(block, repeat=3)):
                continue
            ids = [e for e in block if all(prod[(e, x)] == x == prod[(x, e)] for x in block)]
            if ids and all(any(prod[(x, y)] == ids[0] for y in block) for x in block):
                covered |= square
    return covered == set(prod)


class TestFromGFamily:
    def test_alex523_carrier_size(self):
        assert corpus.pmb("alex523").n == 20

    def test_alex523_sample_operation(self):
        P = corpus.pmb("alex523")
        assert decode_pair(P.under[encode_pair(2, 3, 4)][encode_pair(3, 3, 4)], 4) == (3, 3)

    def test_alex523_product(self):
        F, P = corpus.family("alex523"), corpus.pmb("alex523")
        for a, g, h in itertools.product(range(5), range(4), range(4)):
            left = encode_pair(a, g, 4)
            right = encode_pair(F.under[g][a][a], h, 4)
            assert decode_pair(P.prod[(left, right)], 4) == (a, (g + h) % 4)
        assert len(P.prod) == 5 * 4 * 4

    @pytest.mark.parametrize("name", corpus.NAMES)
    def test_corpus_pmbs_pass(self, name):
        assert check_pmb_axioms(corpus.pmb(name)).passed

    @given(st.sampled_from([(3, 2, 1), (4, 3, 1), (5, 4, 2), (5, 3, 4), (7, 6, 3)]))
    def test_random_alexander_pmbs_pass(self, params):
        assert check_pmb_axioms(pmb_from_gfamily(associated_gfamily(make_alexander(*params)))).passed

    @pytest.mark.parametrize("name", corpus.NAMES)
    def test_group_labels(self, name):
        F, P = corpus.family(name), corpus.pmb(name)
        m = F.group.m
        for p, q in itertools.product(range(P.n), repeat=2):
            g, h = p % m, q % m
            assert P.over[p][q] % m == g
            assert P.under[p][q] % m == F.group.conj(g, h)

    def test_invalid_family_is_rejected(self):
        G = cyclic_group(2)
        ident = ((0, 0), (1, 1))
        F = GFamily(2, G, (ident, ((1, 1), (1, 0))), (ident, ident))
        with pytest.raises(ValueError):
            pmb_from_gfamily(F)

    def test_pair_encoding(self):
        for a, g in itertools.product(range(5), range(4)):
            assert decode_pair(encode_pair(a, g, 4), 4) == (a, g)


class TestAxioms:
    def test_removing_a_product_is_detected(self):
        P = corpus.pmb("alex312")
        prod = dict(P.prod)
        del prod[next(iter(prod))]
        report = check_pmb_axioms(PartialMultBiquandle(P.base, prod))
        assert not report.passed
        assert report.labels() & {"ii:membership", "iii:membership", "iv:membership", "v"}

    def test_changing_a_product_is_detected(self):
        P = corpus.pmb("alex312")
        prod = dict(P.prod)
        key = next(iter(prod))
        prod[key] = (prod[key] + 1) % P.n
        assert not check_pmb_axioms(PartialMultBiquandle(P.base, prod)).passed

    @pytest.mark.parametrize("name", corpus.NAMES)
    def test_empty_domain_is_vacuous(self, name):
        P = PartialMultBiquandle(corpus.biquandle(name), {})
        assert check_pmb_axioms(P).passed
        assert is_group_decomposable(P) == (True, [])
        assert all(factorizations(P, c) == [] for c in range(P.n))

    def test_full_group_product(self):
        for G in (cyclic_group(4), symmetric_group(3)):
            P = group_pmb(G)
            assert check_pmb_axioms(P).passed
            assert is_group_decomposable(P) == (True, [list(range(G.m))])

    def test_off_carrier_product(self):
        with pytest.raises(DomainProductMismatch):
            PartialMultBiquandle(trivial_biquandle(2), {(0, 5): 1})
        with pytest.raises(MalformedTable):
            PartialMultBiquandle(trivial_biquandle(2), {(0, 1): 5})


class TestDecomposability:
    # regression values from the block algorithm
    @pytest.mark.parametrize("name,expected", [
        ("trivial1", True), ("z2shift", False), ("alex312", False), ("alex523", False),
        ("conj_s3", True),
    ])
    def test_corpus(self, name, expected):
        ok, blocks = is_group_decomposable(corpus.pmb(name))
        assert ok is expected
        if ok:
            assert sorted(x for b in blocks for x in b) == list(range(corpus.pmb(name).n))

    @pytest.mark.parametrize("P", [
        corpus.pmb("trivial1"), corpus.pmb("z2shift"), corpus.pmb("alex312"),
        group_pmb(cyclic_group(4)), group_pmb(direct_product(cyclic_group(2), cyclic_group(2))),
        group_pmb(symmetric_group(3)),
        PartialMultBiquandle(trivial_biquandle(4), {(0, 0): 0, (1, 1): 1, (1, 2): 2,
                                                    (2, 1): 2, (2, 2): 1}),
        PartialMultBiquandle(trivial_biquandle(3), {(0, 1): 1, (1, 1): 1}),
    ], ids=["trivial1", "z2shift", "alex312", "Z4", "V4", "S3", "two-blocks", "non-group"])
    def test_block_algorithm_matches_brute_force(self, P):
        assert P.n <= 8
        assert is_group_decomposable(P)[0] == brute_force_decomposable(P)

    def test_two_blocks(self):
        P = PartialMultBiquandle(trivial_biquandle(4), {(0, 0): 0, (1, 1): 1, (1, 2): 2,
                                                        (2, 1): 2, (2, 2): 1})
        assert is_group_decomposable(P) == (True, [[0], [1, 2]])


class TestFactorizations:
    def test_z1_family(self):
        assert factorizations(corpus.pmb("trivial1"), 0) == [(0, 0)]

    def test_alex312(self):
        F, P = corpus.family("alex312"), corpus.pmb("alex312")
        for a, k in itertools.product(range(3), range(2)):
            expected = sorted((encode_pair(a, g, 2), encode_pair(F.under[g][a][a], h, 2))
                              for g, h in itertools.product(range(2), repeat=2)
                              if (g + h) % 2 == k)
            assert factorizations(P, encode_pair(a, k, 2)) == expected
            assert len(expected) == 2

    @pytest.mark.parametrize("name", corpus.NAMES)
    def test_exchanger_exists(self, name):
        P = corpus.pmb(name)
        for c in range(P.n):
            for (a, b), (x, d) in itertools.product(factorizations(P, c), repeat=2):
                e = find_exchanger(P, a, b, x, d)
                assert e is not None
                assert P.prod[(a, e)] == x and P.prod[(e, d)] == b


class TestFormat:
    @pytest.mark.parametrize("name", corpus.NAMES)
    def test_round_trip(self, name):
        P = corpus.pmb(name)
        assert parse_pmb(serialize_pmb(P)) == P

    def test_empty_domain_file(self):
        P = parse_pmb("pmb 1\nunder\n0\nover\n0\nprod\n")
        assert P.prod == {}

    @pytest.mark.parametrize("text", [
        "pmb 1\nunder\n0\nover\n0\n",
        "pmb 1\nunder\n0\nover\n0\nprod\n0 0\n",
        "pmb 1\nunder\n0\nover\n0\nprod\n0 0 3\n",
        "pmb 1\nunder\n0\nover\n0\nprod\n0 0 0\n0 0 0\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_pmb(text)
