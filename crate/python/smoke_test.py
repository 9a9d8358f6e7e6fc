"""Smoke test for the pyskeindaha extension.

Build with `maturin develop -m crates/py/Cargo.toml`, or run
`cargo build --release -p skeindaha-py` and let this script load the
library from target/release.
"""

import importlib.util
import json
import pathlib
import shutil
import sys
import tempfile


def load():
    try:
        import pyskeindaha
        return pyskeindaha
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for name in ("libpyskeindaha.so", "libpyskeindaha.dylib", "pyskeindaha.dll"):
        lib = root / "target" / "release" / name
        if lib.exists():
            tmp = pathlib.Path(tempfile.mkdtemp()) / "pyskeindaha.so"
            shutil.copy(lib, tmp)
            spec = importlib.util.spec_from_file_location("pyskeindaha", tmp)
            mod = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(mod)
            return mod
    sys.exit("pyskeindaha not built")


def main():
    sk = load()

    g2 = sk.g_operator(2)
    curve = sk.eval_curve("k2", "1^2")
    assert not curve.is_zero()
    assert (curve - curve).is_zero()
    assert json.loads(curve.to_json())

    kg = sk.k_operator(1) * sk.g_operator(1)
    assert kg.term_count() > 0
    assert sk.eval_word("T1 T0 + T0^-1 T1^-1", e_sided=True) == sk.eval_curve("k3").e_sided()
    assert g2 == sk.Operator.from_json(g2.to_json())

    seed = sk.Seed.initial()
    assert seed.run("2,3,2,s(3,5)").run("s(3,5),2,3,2") == seed
    assert seed.mutate(4).mutate(4) == seed

    report = sk.verify("pi1")
    assert report.all_pass() and report.total() == 9, report.table()
    assert report.get("pi1/negative/B_to_AB") == (True, "none")

    try:
        sk.eval_word("T0 T5")
    except ValueError:
        pass
    else:
        raise AssertionError("bad generator accepted")

    print("pyskeindaha smoke test passed")


if __name__ == "__main__":
    main()
