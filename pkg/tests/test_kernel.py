import random

import pytest

from cplactic import kernel

BACKENDS = kernel.available_backends()


def _words(n, count, seed):
    rng = random.Random(seed)
    letters = list(range(1, n + 1)) + list(range(-n, 0))
    return [tuple(rng.choice(letters) for _ in range(rng.randint(0, 12))) for _ in range(count)]


def test_python_backend_always_available():
    assert "python" in BACKENDS
    assert kernel.BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernel not built")
@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_backends_agree(n):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for w in _words(n, 400, seed=n):
        for i in range(1, n + 1):
            assert py.reduced_signature(w, n, i) == cy.reduced_signature(w, n, i)
            assert py.eps_phi(w, n, i) == cy.eps_phi(w, n, i)
            assert py.apply_f(w, n, i) == cy.apply_f(w, n, i)
            assert py.apply_e(w, n, i) == cy.apply_e(w, n, i)
        top, path = py.raise_to_highest(w, n)
        assert cy.raise_to_highest(w, n) == (top, path)
        back = tuple(reversed(path))
        assert py.lower_along(top, n, back) == cy.lower_along(top, n, back) == w


def test_pure_python_env_switch():
    import subprocess
    import sys

    code = "from cplactic import kernel; print(kernel.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"CPLACTIC_PURE_PYTHON": "1", "PATH": ""},
        capture_output=True,
        text=True,
    )
    assert out.stdout.strip() == "python"
