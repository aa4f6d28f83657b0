import pytest

from cmarr.generators import (gen_G4, gen_G8, gen_coxeter_namikawa,
                              gen_cyclic, gen_dihedral_even, gen_wreath)


def small_corpus():
    """Arrangements used across property tests: every generator family at
    small parameters, plus the G8 list."""
    arrs = [gen_dihedral_even(), gen_G4(), gen_G8(),
            gen_coxeter_namikawa((4,)), gen_coxeter_namikawa((2, 2))]
    for ell in (2, 3, 4):
        arrs.append(gen_cyclic(ell))
    for ell in (2, 3, 4):
        for n in (2, 3):
            arrs.append(gen_wreath("A%d" % (ell - 1), ell, n))
    return arrs


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()
