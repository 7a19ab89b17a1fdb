import importlib.util
from pathlib import Path

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


def test_benchmark_smoke(capsys):
    spec = importlib.util.spec_from_file_location("bench_kernels", BENCH)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    rows = bench.run([3, 6], repeat=1)
    assert [(k, n) for k, n, *_ in rows] == [("satisfying", 3), ("covering", 3), ("satisfying", 6), ("covering", 6)]
    assert "speedup" in capsys.readouterr().out
