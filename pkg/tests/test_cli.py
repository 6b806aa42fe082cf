import json
import subprocess
import sys

import pytest

from toruscovers.cli import (
    CACHE_VERSION,
    CacheError,
    ResultCache,
    main,
)


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as e:
        code = e.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_counts_json(capsys):
    code, out, _ = run(["counts", "--d", "3", "--sigma", "3", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["N"] == 3
    assert payload["M"] == "10/3"
    assert payload["slope"] == "10"


def test_counts_methods_agree(capsys):
    outs = []
    for method in ("brute", "burnside"):
        code, out, _ = run(
            ["counts", "--d", "5", "--sigma", "2,2", "--method", method,
             "--format", "json"],
            capsys,
        )
        assert code == 0
        outs.append(json.loads(out))
    assert outs[0]["types"] == outs[1]["types"]
    code, out, _ = run(
        ["counts", "--d", "5", "--sigma", "2,2", "--method", "formula",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    got = json.loads(out)
    assert (got["N"], got["M"]) == (outs[0]["N"], outs[0]["M"])


def test_formula_method_rejects_unknown_family(capsys):
    code, _, err = run(
        ["counts", "--d", "5", "--sigma", "5,0", "--method", "formula"], capsys
    )
    assert code == 2
    code, _, err = run(
        ["counts", "--d", "6", "--sigma", "3", "--method", "formula"], capsys
    )
    assert code == 2  # composite degree


def test_enumerate_table(capsys):
    code, out, _ = run(["enumerate", "--d", "3", "--sigma", "3"], capsys)
    assert code == 0
    assert out.strip().splitlines()[-1] == "total 3"


def test_slope_json(capsys):
    code, out, _ = run(
        ["slope", "--d", "5", "--sigma", "5", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["slope"] == "1548/169"


def test_components_with_genus_check(capsys):
    code, out, _ = run(
        ["components", "--d", "5", "--sigma", "5", "--genus", "3",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    assert sorted(c["size"] for c in payload["components"]) == [3, 10, 12, 15]
    code, _, err = run(
        ["components", "--d", "5", "--sigma", "5", "--genus", "2"], capsys
    )
    assert code == 2
    assert "genus" in err


def test_genus_reports_closed_form_flags(capsys):
    code, out, _ = run(
        ["genus", "--d", "5", "--sigma", "3", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 88
    flags = payload["closed_form"]
    assert flags["printed_matches"] is False
    assert flags["repaired_matches"] is True


def test_orbifold(capsys):
    code, out, _ = run(
        ["orbifold", "--d", "3", "--sigma", "3", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["orbifold"] == [{"order": 3, "count": 1}]
    assert payload["chi"] == "-14"


def test_characters_csv(capsys):
    code, out, _ = run(["characters", "--d", "3"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "shape,3,2|1,1|1|1"


def test_genfun_check(capsys):
    code, out, _ = run(["genfun-check", "--d-max", "4"], capsys)
    assert code == 0
    assert "PASS" in out


def test_verify_dejonquieres(capsys):
    code, out, _ = run(["verify", "--dejonquieres"], capsys)
    assert code == 0
    assert out.count("PASS") == 3


def test_verify_needs_a_target(capsys):
    code, _, err = run(["verify"], capsys)
    assert code == 2


def test_invalid_sigma_exit_code(capsys):
    code, _, err = run(["counts", "--d", "5", "--sigma", "x"], capsys)
    assert code == 2
    assert "sigma" in err


def test_capacity_exit_code(capsys):
    code, _, err = run(["enumerate", "--d", "11", "--sigma", "3"], capsys)
    assert code == 3
    # the bound is adjustable in both directions
    code, _, err = run(
        ["counts", "--d", "5", "--sigma", "3", "--max-degree", "4"], capsys
    )
    assert code == 3
    code, out, _ = run(
        ["counts", "--d", "5", "--sigma", "3", "--max-degree", "5",
         "--format", "json"],
        capsys,
    )
    assert code == 0 and json.loads(out)["N"] == 27


def test_probe_small(capsys):
    code, out, _ = run(
        ["probe-g3", "--max-prime", "13", "--format", "json"], capsys
    )
    assert code == 0
    rows = json.loads(out)
    assert [r["d"] for r in rows] == [5, 7, 11, 13]


def test_origami_render_ascii(capsys):
    code, out, _ = run(
        ["origami", "render", "--d", "5", "--alpha", "(1 5)",
         "--beta", "(1 2 3 4)"],
        capsys,
    )
    assert code == 0
    assert "| 1*|" in out


def test_origami_render_by_index(tmp_path, capsys):
    target = tmp_path / "s.svg"
    code, _, _ = run(
        ["origami", "render", "--d", "5", "--sigma", "5", "--index", "2",
         "--format", "svg", "--output", str(target)],
        capsys,
    )
    assert code == 0
    assert target.read_text().startswith("<?xml")
    code, _, err = run(
        ["origami", "render", "--d", "5", "--sigma", "5", "--index", "99"],
        capsys,
    )
    assert code == 2


def test_sweep_table_and_csv(tmp_path, capsys):
    code, out, _ = run(
        ["sweep", "--d-range", "3..5", "--sigma", "3"], capsys
    )
    assert code == 0
    assert out.splitlines()[0] == "d=3  sigma=3  N=3  M=10/3  slope=10"
    target = tmp_path / "rows.csv"
    code, _, _ = run(
        ["sweep", "--d-range", "3..5", "--sigma", "3", "--format", "csv",
         "--output", str(target)],
        capsys,
    )
    assert code == 0
    assert target.read_text().startswith("M,N,d")


# ---------------------------------------------------------------------------
# cache behavior


def test_cache_round_trip_and_canonical_keys(tmp_path):
    cache = ResultCache.at(tmp_path)
    cache.put({"d": 5, "sigma": [3], "version": 1}, {"N": 27})
    assert cache.get({"version": 1, "sigma": [3], "d": 5}) == {"N": 27}
    assert cache.get({"d": 5, "sigma": [3], "version": 2}) is None


def test_cache_last_writer_wins(tmp_path):
    cache = ResultCache.at(tmp_path)
    key = {"d": 3, "version": 1}
    cache.put(key, {"N": 1})
    cache.put(key, {"N": 2})
    assert cache.get(key) == {"N": 2}
    assert cache.compact() == 1
    assert cache.get(key) == {"N": 2}


def test_cache_tolerates_torn_lines(tmp_path):
    cache = ResultCache.at(tmp_path)
    cache.put({"d": 3}, {"N": 1})
    with open(cache.path, "a", encoding="utf-8") as fh:
        fh.write('{"key": {"d": 4}, "value": {"N"')  # crash mid-write
    cache.put({"d": 5}, {"N": 9})
    assert cache.get({"d": 3}) == {"N": 1}
    assert cache.get({"d": 4}) is None
    assert cache.get({"d": 5}) == {"N": 9}
    kept = cache.compact()
    assert kept == 2
    lines = cache.path.read_text().splitlines()
    assert all(json.loads(line) for line in lines)


def test_cache_version_bump_recomputes(tmp_path, capsys):
    argv = ["sweep", "--d", "3", "--sigma", "3", "--cache-dir", str(tmp_path)]
    code, _, err = run(argv, capsys)
    assert code == 0 and "(0 cache hits)" in err
    code, _, err = run(argv, capsys)
    assert code == 0 and "(1 cache hits)" in err
    # rewrite the stored record under a stale version: must be ignored
    records = [json.loads(l) for l in (tmp_path / "results.jsonl").read_text().splitlines()]
    for rec in records:
        rec["key"]["version"] = CACHE_VERSION - 1
    (tmp_path / "results.jsonl").write_text(
        "\n".join(json.dumps(r) for r in records) + "\n"
    )
    code, _, err = run(argv, capsys)
    assert code == 0 and "(0 cache hits)" in err


def test_cache_hit_output_byte_identical(tmp_path, capsys):
    argv = ["sweep", "--d-range", "3..4", "--sigma", "2,2",
            "--cache-dir", str(tmp_path), "--format", "json"]
    code, cold, _ = run(argv, capsys)
    assert code == 0
    code, warm, _ = run(argv, capsys)
    assert code == 0
    assert cold == warm


def test_cache_unreadable_path_is_exit_4(tmp_path, capsys):
    (tmp_path / "results.jsonl").mkdir()
    code, _, err = run(
        ["sweep", "--d", "3", "--sigma", "3", "--cache-dir", str(tmp_path)],
        capsys,
    )
    assert code == 4
    assert "cache" in err


def test_cache_env_var_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("TORUSCOVERS_CACHE_DIR", str(tmp_path))
    code, _, err = run(["sweep", "--d", "3", "--sigma", "3"], capsys)
    assert code == 0
    assert (tmp_path / "results.jsonl").exists()


def test_parallel_sweep_matches_serial(tmp_path, capsys):
    serial = run(["sweep", "--d-range", "3..6", "--sigma", "3",
                  "--format", "json"], capsys)
    parallel = run(["sweep", "--d-range", "3..6", "--sigma", "3",
                    "--jobs", "2", "--format", "json"], capsys)
    assert serial == parallel


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "toruscovers.cli", "slope", "--d", "3",
         "--sigma", "3", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["slope"] == "10"
