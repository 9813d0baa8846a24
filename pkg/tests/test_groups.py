import json
from itertools import product

import pytest

from alexgroups.groups import (
    BUILTIN_GROUPS,
    INT_MAX,
    INT_MIN,
    XnElement,
    XnGroup,
    builtin_group,
    group_from_table,
    group_inv,
    group_mul,
    load_group,
    resolve_group,
    validate_cayley,
    xn_inv,
    xn_mul,
)
from alexgroups.verdict import InputError
from alexgroups.xn import window

C4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]


class TestValidateCayley:
    def test_trivial(self):
        assert validate_cayley([[0]]).passed

    def test_c4(self):
        assert validate_cayley(C4).passed

    def test_idempotent_fails_inverse(self):
        v = validate_cayley([[0, 1], [1, 1]])
        assert not v.passed and v.reason == "inverse" and v.witness == 1

    def test_closure(self):
        v = validate_cayley([[0, 2], [1, 0]])
        assert v.reason == "closure" and v.witness == (0, 1)

    def test_associativity(self):
        # Latin square with identity 0 that is not associative
        t = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        v = validate_cayley(t)
        assert v.reason == "associativity"
        i, j, k = v.witness
        assert t[t[i][j]][k] != t[i][t[j][k]]

    @pytest.mark.parametrize("bad", [[], [[0, 1]]])
    def test_input_errors(self, bad):
        with pytest.raises(InputError):
            validate_cayley(bad)


class TestBuiltins:
    @pytest.mark.parametrize("name", sorted(BUILTIN_GROUPS))
    def test_group_laws(self, name):
        G = builtin_group(name)
        assert validate_cayley(G.table).passed
        for x in range(G.order):
            assert G.table[x][G.inv[x]] == 0 == G.table[G.inv[x]][x]

    def test_orders(self):
        orders = {name: builtin_group(name).order for name in BUILTIN_GROUPS}
        assert orders == {"trivial": 1, "c2": 2, "c3": 3, "c4": 4, "c5": 5, "c6": 6, "v4": 4, "s3": 6}

    def test_c4_entry(self):
        assert builtin_group("c4").table[1][3] == 0

    def test_s3_nonabelian(self):
        G = builtin_group("s3")
        i, j = G.non_commuting_pair()
        assert G.table[i][j] != G.table[j][i]
        assert not G.is_abelian()

    def test_v4_exponent_two(self):
        G = builtin_group("v4")
        assert G.inv == (0, 1, 2, 3)

    def test_unknown(self):
        with pytest.raises(InputError):
            builtin_group("d4")


class TestLookup:
    def test_mul_inv(self):
        G = builtin_group("c4")
        assert group_mul(G, 1, 3) == 0
        assert group_inv(G, 1) == 3
        assert all(group_mul(G, 0, x) == x for x in range(4))

    def test_out_of_range(self):
        G = builtin_group("c4")
        with pytest.raises(InputError):
            group_mul(G, 4, 0)
        with pytest.raises(InputError):
            group_inv(G, -1)


class TestIngestion:
    def test_reindexes_identity(self):
        # c2 written with the identity at index 1
        G = group_from_table([[1, 0], [0, 1]])
        assert G.table == ((0, 1), (1, 0))

    def test_reindex_c3(self):
        # Z_3 with elements listed as (1, 0, 2) meaning identity at index 1
        t = [[2, 0, 1], [0, 1, 2], [1, 2, 0]]
        G = group_from_table(t)
        assert validate_cayley(G.table).passed and G.order == 3

    def test_no_identity_rejected(self):
        with pytest.raises(InputError):
            group_from_table([[1, 1], [1, 1]])

    def test_load(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"name": "z4", "order": 4, "table": C4}))
        G = load_group(path)
        assert G.name == "z4" and G.table == builtin_group("c4").table
        assert resolve_group(str(path)).name == "z4"

    def test_order_mismatch(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"name": "z4", "order": 3, "table": C4}))
        with pytest.raises(InputError):
            load_group(path)

    def test_bad_json(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text("{not json")
        with pytest.raises(InputError):
            load_group(path)


class TestXn:
    X4 = XnGroup(builtin_group("c4"))

    def test_examples(self):
        assert xn_mul(self.X4, (1, 3), (2, 2)) == (3, 1)
        assert xn_inv(self.X4, (2, 1)) == (-2, 3)
        for p in window(self.X4, 2):
            assert xn_mul(self.X4, (0, 0), p) == p

    @pytest.mark.parametrize("name", ["trivial", "c3", "v4", "s3"])
    def test_group_axioms_on_h2(self, name):
        X = XnGroup(builtin_group(name))
        H = list(window(X, 2))
        for p in H:
            assert xn_mul(X, p, xn_inv(X, p)) == (0, 0)
            assert xn_inv(X, xn_inv(X, p)) == p
        for p, q, r in product(H, repeat=3):
            assert xn_mul(X, xn_mul(X, p, q), r) == xn_mul(X, p, xn_mul(X, q, r))

    def test_overflow_reported(self):
        with pytest.raises(OverflowError):
            xn_mul(self.X4, (INT_MAX, 0), (1, 0))
        with pytest.raises(OverflowError):
            xn_inv(self.X4, (INT_MIN, 0))

    def test_bad_elements(self):
        with pytest.raises(InputError):
            xn_mul(self.X4, (0, 4), (0, 0))
        with pytest.raises(InputError):
            xn_inv(self.X4, (0.5, 0))

    def test_element_str(self):
        assert str(XnElement(-1, 2)) == "(-1,2)"
