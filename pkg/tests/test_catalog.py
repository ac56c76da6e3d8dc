import pytest

from conftest import CATALOG_PATH, FIXTURES, cyc, fixture_gens
from sporadic_designs.catalog import (
    BlockSpec,
    GroupWord,
    Term,
    evaluate_word,
    format_block_file,
    format_generator_file,
    format_word,
    load_catalog,
    parse_block_file,
    parse_catalog_file,
    parse_generator_file,
    parse_named_generator_file,
    parse_orbit_file,
    parse_subgroup_file,
    parse_word,
    socle_name,
)
from sporadic_designs.errors import (
    FileDegreeMismatch,
    NonBijection,
    NonDividingMaximal,
    ParseError,
    UnboundName,
)
from sporadic_designs.perm import build_chain, generated, identity


class TestGeneratorFiles:
    def test_c3(self):
        g = parse_generator_file(b"degree 3\nname c3\ngen a 1 2 0\n")
        assert g.generators == (cyc(3, (0, 1, 2)),)
        assert g.names == ("a",)

    def test_comments_and_name(self):
        g, name = parse_named_generator_file("# c\ndegree 2\n# x\nname z2\ngen t 1 0\n")
        assert name == "z2" and g.degree == 2

    def test_repeated_image(self):
        with pytest.raises(NonBijection) as exc:
            parse_generator_file(b"degree 3\nname x\ngen a 1 1 0\n")
        assert exc.value.line == 3

    def test_wrong_image_count(self):
        with pytest.raises(FileDegreeMismatch) as exc:
            parse_generator_file(b"degree 3\nname x\ngen a 1 0\n")
        assert exc.value.line == 3

    def test_syntax_error_line(self):
        with pytest.raises(ParseError) as exc:
            parse_generator_file(b"degree 3\nname x\ngenerator a 1 2 0\n")
        assert exc.value.line == 3

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_generator_file(b"name x\n")

    def test_round_trip(self):
        g = fixture_gens("M11")
        text = format_generator_file(g, "M11", comments=["round trip"])
        assert parse_generator_file(text) == g

    def test_hs_fixture_order_matches_catalog(self):
        cat = load_catalog(CATALOG_PATH)
        assert build_chain(fixture_gens("HS")).order == cat["HS"].order == 44352000

    def test_every_gens_fixture_matches_catalog(self):
        cat = load_catalog(CATALOG_PATH)
        for path in FIXTURES.glob("*.gens"):
            gens, name = parse_named_generator_file(path.read_bytes())
            if name in cat:
                assert build_chain(gens).order == cat[name].order, path.name


M11_RECORD = "group M11 order 7920 out 1 complete yes\nmax M10 order 720\n"


class TestCatalogFiles:
    def test_index(self):
        cat = parse_catalog_file(M11_RECORD)
        assert cat["M11"].maximal_subgroups[0].index == 11

    def test_non_dividing(self):
        with pytest.raises(NonDividingMaximal):
            parse_catalog_file("group M11 order 7920 out 1 complete yes\nmax X order 13\n")

    def test_hs_index(self):
        cat = parse_catalog_file("group HS order 44352000 out 2 complete yes\nmax U3(5):2 order 252000\n")
        assert cat["HS"].maximal_subgroups[0].index == 176

    def test_syntax_error_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_catalog_file(M11_RECORD + "maxx L2(11) order 660\n")
        assert exc.value.line == 3

    def test_scientific_notation_rejected(self):
        with pytest.raises(ParseError):
            parse_catalog_file("group M11 order 7.92e3 out 1 complete yes\n")

    def test_records_need_blank_separator(self):
        with pytest.raises(ParseError):
            parse_catalog_file(M11_RECORD + M11_RECORD.replace("M11", "M12"))

    def test_bundled_catalog_invariants(self, catalog):
        for entry in catalog.values():
            for rec in entry.maximal_subgroups:
                assert rec.order * rec.index == entry.order
            if entry.name in ("M11", "HS", "J1", "Fi24'"):
                assert entry.complete_list

    def test_bundled_catalog_covers_all_sporadics(self, catalog):
        for name in (
            "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "McL", "Suz", "He",
            "Ru", "O'N", "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HN", "Ly", "Th", "B", "Monster",
        ):
            assert name in catalog
            entry = catalog[name]
            assert entry.out_order in (1, 2)
            if entry.out_order == 2:
                assert ("Fi24" if name == "Fi24'" else name + ":2") in catalog

    def test_monster_incomplete(self, catalog):
        monster = catalog["Monster"]
        assert not monster.complete_list
        assert monster.order == 808017424794512875886459904961710757005754368000000000

    def test_socle_names(self):
        assert socle_name("HS:2") == "HS"
        assert socle_name("Fi24") == "Fi24'"
        assert socle_name("L2(11)") is None


class TestWords:
    def test_single(self):
        assert parse_word("a").factors() == [("a", 1)]

    def test_inverse(self):
        assert parse_word("a*b^-1").factors() == [("a", 1), ("b", -1)]

    def test_grouped(self):
        w = parse_word("(a*b)^3")
        assert len(w.factors()) == 6
        assert w.terms[0].exponent == 3 and isinstance(w.terms[0].atom, GroupWord)

    def test_whitespace_insignificant(self):
        assert parse_word(" ( a * b ) ^ -2 ") == parse_word("(a*b)^-2")

    def test_negative_group_power_reverses(self):
        assert parse_word("(a*b)^-1").factors() == [("b", -1), ("a", -1)]

    @pytest.mark.parametrize("text,pos", [("a*", 3), ("a^b", 3), ("(a*b", 5), ("A", 1), ("a b", 3)])
    def test_errors_report_position(self, text, pos):
        with pytest.raises(ParseError) as exc:
            parse_word(text)
        assert exc.value.position == pos

    def test_format(self):
        w = GroupWord((Term("a"), Term(GroupWord((Term("b"), Term("c", -1))), 2)))
        assert format_word(w) == "a*(b*c^-1)^2"
        assert parse_word(format_word(w)) == w

    def test_evaluate_identity(self):
        g = generated(3, [cyc(3, (0, 1, 2))], names=["a"])
        assert evaluate_word(parse_word("a*a^-1"), g) == identity(3)
        assert evaluate_word(parse_word("a^3"), g) == identity(3)

    def test_evaluate_grouped_power(self):
        g = generated(3, [cyc(3, (0, 1)), cyc(3, (1, 2))], names=["a", "b"])
        # a*b maps 0->1->2, 1->0->0, 2->2->1, the 3-cycle (0 2 1); squared it is (0 1 2)
        assert evaluate_word(parse_word("a*b"), g) == cyc(3, (0, 2, 1))
        assert evaluate_word(parse_word("(a*b)^2"), g) == cyc(3, (0, 1, 2))

    def test_unbound(self):
        g = generated(3, [cyc(3, (0, 1, 2))], names=["a"])
        with pytest.raises(UnboundName):
            evaluate_word(parse_word("a*z"), g)


class TestFixtureFiles:
    def test_subgroup_file(self):
        spec = parse_subgroup_file((FIXTURES / "M11_s5.sub").read_bytes())
        assert spec.group == "M11" and spec.name == "s5"
        sub = spec.generators(fixture_gens("M11"))
        assert build_chain(sub).order == 120

    def test_subgroup_orders(self):
        expect = {"m10": 720, "sylow2": 16, "c8": 8, "q8": 8, "d8": 8, "s5": 120}
        for name, order in expect.items():
            spec = parse_subgroup_file((FIXTURES / f"M11_{name}.sub").read_bytes())
            assert build_chain(spec.generators(fixture_gens("M11"))).order == order

    def test_block_file(self):
        spec = parse_block_file(b"v 7\nblock 0 3 5 6\n")
        assert spec == BlockSpec(7, (0, 3, 5, 6))
        assert parse_block_file(format_block_file(spec)) == spec

    @pytest.mark.parametrize("text", [b"v 7\nblock 3 0\n", b"v 7\nblock 0 7\n", b"block 0 1\n", b"v 7\n"])
    def test_bad_block_files(self, text):
        with pytest.raises(ParseError):
            parse_block_file(text)

    def test_orbit_file(self):
        fx = parse_orbit_file((FIXTURES / "McL_299376.orbits").read_bytes())
        assert fx.group == "McL" and fx.v == 299376 and fx.stabilizer_order == 1152
        first = fx.subgroups[0]
        assert first.lengths == (144,) + (288,) * 5 + (576,)
        assert first.partial
