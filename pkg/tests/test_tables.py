from ordramsey.search import ResultsCache
from ordramsey.tables import class_spec, parse_range, table_sweep, to_csv, to_latex


def test_parse_range():
    assert parse_range("3..6") == [3, 4, 5, 6]
    assert parse_range("4,6,8") == [4, 6, 8]
    assert parse_range("4..10/2") == [4, 6, 8, 10]
    assert parse_range("3, 5..6") == [3, 5, 6]


def test_class_spec():
    assert class_spec("pmon", 4) == "pmon:4"
    assert class_spec("qmon:5:{}", 2) == "qmon:5:2"


def test_cyclic_monotone_sweep(tmp_path):
    recs = table_sweep("pmon", "pmon", [3, 4], [3, 4, 5], "cyclic", solver="embedded",
                       cache=ResultsCache(tmp_path), jobs=2)
    got = {(r.a, r.b): r.result.value for r in recs}
    assert got == {(3, 3): 3, (3, 4): 5, (3, 5): 7, (4, 4): 7, (4, 5): 10}
    text = to_csv(recs)
    assert text.splitlines()[0] == "a,b,value,exact,witness"
    assert "4,5,10,true,witnesses/" in text
    tex = to_latex(recs, "cyc", caption="Cyclic values")
    assert "\\backslashbox{$a$}{$b$}" in tex
    assert "$4$ &  & $7$ & $10$\\\\" in tex
    assert "R_\\mathrm{cyc}" in tex


def test_bounds_render_as_ge(tmp_path):
    recs = table_sweep("pmon", "pmon", [4], [4], "ord", solver="embedded", n_max=5)
    assert recs[0].text == ">=6"
    assert "$\\ge 6$" in to_latex(recs)
    assert "4,4,>=6,false," in to_csv(recs)
