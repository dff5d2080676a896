import random

import pytest

from cordial import (
    CayleyTable,
    CordialInstance,
    Digraph,
    VertexLabeling,
    alternating_path,
    cayley_to_text,
    complete_graph,
    gamma_triple,
    is_a_cordial,
    is_balanced_triple,
    is_cordial,
    is_friendly,
    is_subset_q_cordial,
    parse_cayley_text,
    path_graph,
    validate_latin,
    z3_minus_instance,
)

Z2 = CayleyTable(((0, 1), (1, 0)))
Z3 = CayleyTable(((0, 1, 2), (1, 2, 0), (2, 0, 1)))


class TestCayleyTable:
    def test_ragged_rejected(self):
        with pytest.raises(ValueError, match="ragged"):
            CayleyTable(((0, 1), (1,)))

    def test_entry_out_of_range(self):
        with pytest.raises(ValueError, match="range"):
            CayleyTable(((0, 2), (1, 0)))

    def test_names_length_checked(self):
        with pytest.raises(ValueError):
            CayleyTable(((0,),), names=("a", "b"))

    def test_commutativity(self):
        assert Z3.is_commutative()
        assert not z3_minus_instance().table.is_commutative()


class TestValidateLatin:
    def test_group_tables_accepted(self):
        assert validate_latin(Z2)
        assert validate_latin(Z3)
        assert validate_latin(z3_minus_instance().table)

    def test_raw_rows_accepted(self):
        assert validate_latin([[0, 1], [1, 0]])

    def test_repeated_entry_rejected(self):
        assert not validate_latin([[0, 0], [1, 0]])

    def test_row_swap_breaks_columns(self):
        rows = [list(r) for r in Z3.rows]
        rows[1][0], rows[1][2] = rows[1][2], rows[1][0]
        assert not validate_latin(rows)

    def test_ragged_raises(self):
        with pytest.raises(ValueError, match="ragged"):
            validate_latin([[0, 1], [1]])


class TestZ3MinusInstance:
    def test_operation_matches_arc_convention(self):
        t = z3_minus_instance().table
        assert t.op(0, 1) == 1
        assert t.op(1, 1) == 0
        assert t.op(1, 0) == 2
        assert t.display(1) == "+1"
        assert t.display(2) == "-1"

    def test_subset(self):
        assert z3_minus_instance().label_subset == (0, 1)

    def test_is_latin(self):
        assert validate_latin(z3_minus_instance().table)


class TestCordialInstance:
    def test_subset_must_be_elements(self):
        with pytest.raises(ValueError):
            CordialInstance(Z2, (0, 2))

    def test_subset_nonempty(self):
        with pytest.raises(ValueError):
            CordialInstance(Z2, ())

    def test_subset_no_repeats(self):
        with pytest.raises(ValueError):
            CordialInstance(Z2, (0, 0))


class TestSubsetQCordial:
    def test_single_arc(self):
        inst = z3_minus_instance()
        assert is_subset_q_cordial(Digraph(2, ((0, 1),)), inst) == (0, 1)

    def test_alternating_path_10_empty(self):
        assert is_subset_q_cordial(alternating_path(10), z3_minus_instance()) is None

    def test_matches_direct_engine_on_random_digraphs(self):
        inst = z3_minus_instance()
        rng = random.Random(7311)
        for _ in range(60):
            n = rng.randrange(1, 8)
            arcs = []
            for u in range(n):
                for v in range(u + 1, n):
                    pick = rng.randrange(3)
                    if pick == 1:
                        arcs.append((u, v))
                    elif pick == 2:
                        arcs.append((v, u))
            d = Digraph(n, tuple(arcs))
            witness = is_subset_q_cordial(d, inst)
            assert (witness is None) == (is_cordial(d) is None)
            if witness is not None:
                lab = VertexLabeling.from_labels(witness)
                assert is_friendly(lab)
                assert is_balanced_triple(gamma_triple(d, lab))


class TestACordial:
    def test_p3_z2_first_witness(self):
        assert is_a_cordial(path_graph(3), Z2) == (0, 0, 1)

    def test_single_vertex_z2(self):
        assert is_a_cordial(path_graph(1), Z2) == (0,)

    def test_non_commutative_rejected(self):
        with pytest.raises(ValueError, match="commutative"):
            is_a_cordial(path_graph(3), z3_minus_instance().table)

    def test_k3_z3(self):
        witness = is_a_cordial(complete_graph(3), Z3)
        if witness is not None:
            counts = [witness.count(x) for x in range(3)]
            assert max(counts) - min(counts) <= 1


class TestCayleyText:
    def test_round_trip(self):
        for table in (Z2, Z3, z3_minus_instance().table):
            parsed = parse_cayley_text(cayley_to_text(table))
            assert parsed.rows == table.rows

    def test_wrong_row_count(self):
        with pytest.raises(ValueError, match="expected 3"):
            parse_cayley_text("3\n0 1 2\n1 2 0\n")

    def test_bad_entries(self):
        with pytest.raises(ValueError):
            parse_cayley_text("2\n0 1\n1 x\n")

    def test_empty(self):
        with pytest.raises(ValueError, match="empty"):
            parse_cayley_text("\n")
