import json
import logging

import jsonschema
import pytest

from shpf.cache import CACHE_ENV, Cache, default_cache_dir
from shpf.characters import clifford_character, naive_character
from shpf.parking import enumerate_sorted_naive
from shpf.serialize import (
    CLASSFUNCTION_SCHEMA,
    OBJECT_SCHEMA,
    SYMFUNC_SCHEMA,
    classfunction_from_json,
    classfunction_to_json,
    expansion_to_json,
    fmt_q,
    from_json,
    naive_from_json,
    naive_to_json,
    odd_from_json,
    odd_to_json,
    symfunc_to_json,
    tsymfunc_to_json,
)
from shpf.shifted import enumerate_sorted_odd
from shpf.symfunc import big_p, expand_odd_v, sh_symfunc, t_graded


def test_fmt_q_is_never_float():
    assert fmt_q(3) == "3/1"
    assert fmt_q(-0.5) == "-1/2"


@pytest.mark.parametrize("n", range(1, 6))
def test_symfunc_round_trip(n):
    for f in (sh_symfunc(n), big_p(n)):
        data = json.loads(json.dumps(symfunc_to_json(f)))
        jsonschema.validate(data, SYMFUNC_SCHEMA)
        assert from_json(data) == f


def test_tsymfunc_round_trip():
    naive, _ = t_graded(3)
    data = json.loads(json.dumps(tsymfunc_to_json(naive)))
    jsonschema.validate(data, SYMFUNC_SCHEMA)
    assert from_json(data) == naive


def test_expansion_round_trip():
    coeffs = expand_odd_v(sh_symfunc(5))
    data = expansion_to_json(coeffs, 5, "v-odd")
    jsonschema.validate(data, SYMFUNC_SCHEMA)
    assert from_json(data) == coeffs


def test_object_round_trips():
    for x in enumerate_sorted_naive(3):
        data = naive_to_json(x)
        jsonschema.validate(data, OBJECT_SCHEMA)
        assert naive_from_json(data) == x
    for y in enumerate_sorted_odd(3):
        data = odd_to_json(y)
        jsonschema.validate(data, OBJECT_SCHEMA)
        assert odd_from_json(data) == y


@pytest.mark.parametrize("chi", [naive_character(4), clifford_character(3)], ids=["ordinary", "spin"])
def test_classfunction_round_trip(chi):
    data = json.loads(json.dumps(classfunction_to_json(chi)))
    jsonschema.validate(data, CLASSFUNCTION_SCHEMA)
    assert classfunction_from_json(data) == chi


def test_schema_rejects_float_coefficients():
    bad = {"degree": 1, "basis": "p", "terms": [{"partition": [1], "coeff": 0.5}]}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, SYMFUNC_SCHEMA)


def test_cache_hit_and_miss(tmp_path):
    cache = Cache(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return {"x": "1/2"}

    assert cache.memo("op", 3, compute) == {"x": "1/2"}
    assert cache.memo("op", 3, compute) == {"x": "1/2"}
    assert len(calls) == 1 and cache.hits == 1 and cache.misses == 1
    assert not list(tmp_path.glob("*.tmp"))


def test_cache_disabled(tmp_path):
    cache = Cache(tmp_path, enabled=False)
    calls = []
    cache.memo("op", 1, lambda: calls.append(1) or 5)
    cache.memo("op", 1, lambda: calls.append(1) or 5)
    assert len(calls) == 2 and not list(tmp_path.iterdir())


def test_cache_version_bump(tmp_path):
    Cache(tmp_path, version="1").put("op", 2, [1])
    assert Cache(tmp_path, version="1").get("op", 2) == [1]
    assert Cache(tmp_path, version="2").get("op", 2) is None


def test_cache_corrupt_entry_discarded(tmp_path, caplog):
    cache = Cache(tmp_path, version="1")
    cache.put("op", 2, [1])
    path = next(tmp_path.glob("*.json"))
    path.write_text("{not json")
    with caplog.at_level(logging.WARNING):
        assert cache.get("op", 2) is None
    assert "corrupt" in caplog.text
    assert not path.exists()
    assert cache.memo("op", 2, lambda: [1]) == [1]


def test_cache_key_mismatch_discarded(tmp_path):
    cache = Cache(tmp_path, version="1")
    cache.put("op", 2, [1])
    path = next(tmp_path.glob("*.json"))
    entry = json.loads(path.read_text())
    entry["key"]["n"] = 3
    path.write_text(json.dumps(entry))
    assert cache.get("op", 2) is None


def test_cache_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    assert default_cache_dir() == tmp_path
