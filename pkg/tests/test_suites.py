import pytest

from bohr_lab import props


@pytest.mark.parametrize("name", sorted(props.SUITES))
def test_invariant_suite(name):
    failed = [r.to_dict() for r in props.run_suite(name) if not r.passed]
    assert not failed


def test_unknown_suite():
    with pytest.raises(ValueError):
        props.run_suite("nope")
