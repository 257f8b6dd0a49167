"""Quick check that the extension module loads and agrees with known values."""

import mirrorknot as mk

trefoil = mk.GridCode("{{-2,1},{1,1}}")
assert str(trefoil) == "RG[2,2]{{-2,1},{1,1}}"
assert trefoil.components == 1 and trefoil.crossings == 3

assert mk.GridCode("RG[2,2]{{1,1},{-1,-2}}").bracket() == [(3, -1)]
assert str(mk.decode(2, 2, 1, 15)) == "RG[2,2]{{1,1},{1,-2}}"
assert mk.GridCode("{{1,-2},{1,-2}}").canonical_representation() == (2, 2, 5, 15)
assert mk.isometry_class_count(2, 2) == 55

hopf = mk.GridCode("{{1,-2},{1,-2}}")
assert sorted(hopf.l_polynomial()) == sorted(mk.l_family("p", 2))
assert hopf * hopf == hopf

steps, final = mk.GridCode("{{-1,1,-1},{-1,-1},{-1,-1}}").reduce()
assert (final.p, final.q, final.crossings) == (2, 2, 3)
assert final.normalized_polynomial() == mk.GridCode("{{-1,1,-1},{-1,-1},{-1,-1}}").normalized_polynomial()

assert mk.filled(3, 2, 1).unlink_distance() == (2, 5)
assert mk.GridCode("{{2,2},{2,-2}}").is_unlink() == 3
assert trefoil.is_unlink() is False
assert trefoil.mosaic().splitlines()[0] == "4"
assert trefoil.svg().count("<path") == 1

try:
    mk.GridCode("{{1,1},{9}}")
except mk.MirrorKnotError as e:
    assert "LabelError" in str(e)
else:
    raise AssertionError("bad label accepted")

print("smoke test passed:", len(steps), "reduction steps")
