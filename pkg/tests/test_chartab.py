import json

import pytest

from blockgraph.chartab import parse_table, prime_divisors, print_table, validate
from blockgraph.corpus import corpus_path
from blockgraph.cyclotomic import conjugate
from blockgraph.errors import CycParseError, ValidationError

S3_DOC = {
    "name": "S3",
    "order": 6,
    "classes": [{"size": 1, "order": 1}, {"size": 3, "order": 2}, {"size": 2, "order": 3}],
    "irr": [[1, 1, 1], [1, -1, 1], [2, 0, -1]],
}


class TestParse:
    def test_bundled_s3(self, corpus):
        table = corpus("S3")
        assert table.degrees() == (1, 1, 2)
        assert table.num_classes == 3

    def test_bundled_a5(self, corpus):
        table = corpus("A5")
        assert sorted(table.degrees()) == [1, 3, 3, 4, 5]

    def test_perturbed_entry_fails_orthogonality(self):
        doc = corpus_path("A5").read_text()
        data = json.loads(doc)
        entry = data["irr"][2][1]
        data["irr"][2][1] = entry + 1 if isinstance(entry, int) else "1+" + entry
        with pytest.raises(ValidationError) as err:
            parse_table(json.dumps(data))
        assert any("orthogonality" in v for v in err.value.violations)

    def test_malformed_document(self):
        with pytest.raises(CycParseError):
            parse_table(b"{ not json")
        with pytest.raises(CycParseError):
            parse_table(json.dumps({"name": "X", "order": 1}))
        with pytest.raises(CycParseError):
            parse_table(json.dumps(S3_DOC | {"extra": 1}))

    def test_bad_entry_expression(self):
        doc = dict(S3_DOC, irr=[[1, 1, 1], [1, -1, 1], [2, 0, "E("]])
        with pytest.raises(CycParseError):
            parse_table(json.dumps(doc))

    def test_canonical_order_after_shuffle(self, corpus):
        data = json.loads(corpus_path("A5").read_text())
        perm_rows = [3, 0, 4, 1, 2]
        perm_cols = [2, 4, 0, 1, 3]
        data["irr"] = [[data["irr"][r][c] for c in perm_cols] for r in perm_rows]
        data["classes"] = [data["classes"][c] for c in perm_cols]
        shuffled = parse_table(json.dumps(data))
        reference = corpus("A5")
        assert shuffled.irr == reference.irr
        assert [(c.size, c.element_order) for c in shuffled.classes] == [
            (c.size, c.element_order) for c in reference.classes
        ]

    def test_accepts_bytes(self):
        table = parse_table(json.dumps(S3_DOC).encode())
        assert table.group_order == 6


class TestValidate:
    def test_valid_c6_empty(self, corpus):
        assert validate(corpus("C6")) == []

    def test_size_sum_violation(self):
        doc = dict(S3_DOC, classes=[{"size": 1, "order": 1}, {"size": 2, "order": 2},
                                    {"size": 2, "order": 3}])
        with pytest.raises(ValidationError) as err:
            parse_table(json.dumps(doc))
        assert any(v.startswith("size-sum") for v in err.value.violations)

    def test_duplicate_trivial_row(self):
        doc = dict(S3_DOC, irr=[[1, 1, 1], [1, -1, 1], [1, 1, 1]])
        with pytest.raises(ValidationError) as err:
            parse_table(json.dumps(doc))
        assert any(v.startswith("row-orthogonality") for v in err.value.violations)

    def test_every_corpus_table_validates(self, corpus, all_corpus_names):
        for name in all_corpus_names:
            assert validate(corpus(name)) == [], name


class TestIngestedTables:
    def test_degree_lists(self, corpus):
        assert corpus("J1").degrees() == (
            1, 56, 56, 76, 76, 77, 77, 77, 120, 120, 120, 133, 133, 133, 209,
        )
        assert corpus("Sz8").degrees() == (1, 14, 14, 35, 35, 35, 64, 65, 65, 65, 91)
        l52 = corpus("L5_2")
        assert l52.num_classes == 27
        assert l52.degrees()[-2:] == (1024, 1240)
        assert sum(d * d for d in l52.degrees()) == l52.group_order == 9999360

    def test_provenance_notes_present(self, corpus):
        for name in ("J1", "Sz8", "L5_2"):
            assert corpus(name).provenance


class TestPrimeDivisors:
    def test_a5(self, corpus):
        assert prime_divisors(corpus("A5")) == [2, 3, 5]

    def test_j1(self, corpus):
        table = corpus("J1")
        assert table.group_order == 175560
        assert prime_divisors(table) == [2, 3, 5, 7, 11, 19]

    def test_c2(self, corpus):
        assert prime_divisors(corpus("C2")) == [2]


class TestRoundTrip:
    def test_parse_print_bitwise_identity(self, all_corpus_names):
        for name in all_corpus_names:
            text = corpus_path(name).read_text()
            assert print_table(parse_table(text)) == text, name


class TestGaloisStability:
    def test_conjugation_permutes_rows(self, corpus):
        for name in ("A5", "L2_7", "SL23", "Sz8"):
            table = corpus(name)
            rows = set(table.irr)
            for row in table.irr:
                assert tuple(conjugate(v) for v in row) in rows

    def test_conductors_divide_element_orders(self, corpus):
        for name in ("A5", "L2_11", "J1"):
            table = corpus(name)
            for row in table.irr:
                for value, cls in zip(row, table.classes):
                    assert cls.element_order % value.conductor == 0
