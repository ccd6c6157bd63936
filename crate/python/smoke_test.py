"""Smoke test for the pywildgalois extension.

Build it first with `cargo build -p wildgalois-py --release`. The shared
library is loaded from target/release unless PYWILDGALOIS_LIB points
elsewhere.
"""

import importlib.util
import os
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    default = ROOT / "target" / "release" / ("libpywildgalois.dylib" if sys.platform == "darwin" else "libpywildgalois.so")
    path = pathlib.Path(os.environ.get("PYWILDGALOIS_LIB", default))
    spec = importlib.util.spec_from_file_location("pywildgalois", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    wg = load()

    f3 = wg.Field(3)
    assert (f3.p, f3.k, f3.size) == (3, 1, 3)
    assert str(wg.Field.parse("p=2,k=2")) == "p=2,k=2"

    quartic = wg.fixture("thm25_1", a="0,0,0")
    assert str(quartic) == "X0^3*X2 + 2*X0*X2^3 + X1^4"
    assert quartic.multiplicity_at_origin() == 1
    shear = wg.Matrix("1,0,1;0,1,0;0,0,1", f3)
    assert quartic.act(shear) == quartic

    g = wg.Group([shear])
    assert g.order == 3 and g.is_ut_star() and g.structure() == (1, 1)
    assert str(g.orbit_product()) == "X0^3 + 2*X0*X2^2"

    report = wg.verify(quartic, point="1,0,0")
    assert report["schema"] == 1
    assert report["group"]["order"] == 3
    assert report["is_wild"] and report["is_inner"]

    ram = wg.ramify(quartic)
    assert ram["verdict"] == "wildly_ramified"

    built = wg.construct(2, 2, 3, 1, m=0, seed=1)
    assert built["structure"]["u"] == 2 and built["structure"]["l"] == 3
    assert built["verification"]["group"]["order"] == 12

    h = wg.standard_group(5, 1, 4, 1)
    assert len(h) == 20 and h.structure() == (1, 4)

    try:
        wg.construct(3, 1, 4, 1)
    except wg.WildGaloisError as e:
        assert "DivisibilityFail" in str(e)
    else:
        raise AssertionError("expected DivisibilityFail")

    try:
        wg.Form("X0^2 + X1", f3)
    except wg.WildGaloisError as e:
        assert "NotHomogeneous" in str(e)
    else:
        raise AssertionError("expected NotHomogeneous")

    print("pywildgalois smoke test passed")


if __name__ == "__main__":
    main()
