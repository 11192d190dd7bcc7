import pytest
from click.testing import CliRunner

from builders.registry import Design
from server import create_app


@pytest.fixture
def app():
    app = create_app("sqlite://")
    app.config["TESTING"] = True
    yield app


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner():
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 always keeps stderr apart
        return CliRunner()


@pytest.fixture
def broken_design():
    """oop-proposed with its last gate dropped, so B is not restored."""
    from builders.qcla import build_out_of_place
    from simulators.verify import adder_oracle

    def build(n, **_):
        circuit = build_out_of_place(n)
        return circuit.copy_shell(circuit.gates[:-1]).freeze()

    return Design("oop-proposed", build, lambda circuit: adder_oracle("out_of_place", circuit.meta["n"]))
