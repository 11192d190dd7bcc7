from flask import Blueprint, request, jsonify
from models.database import db, CircuitRun, RUN_KINDS
from builders import registry
from resources.tables import table_rows
from utils.qasm import EmitLevel, emit
import datetime
import json
import logging

logger = logging.getLogger(__name__)
circuit_routes = Blueprint('circuit_routes', __name__)


def _design_args(data):
    """design, n, m, color_width from a request body"""
    design = data.get("design")
    n = data.get("n")
    if not design or n is None:
        raise ValueError("design and n are required")
    m = data.get("m")
    color_width = data.get("color_width")
    return (
        design,
        int(n),
        None if m is None else int(m),
        None if color_width is None else int(color_width),
    )


def _save_run(kind, design, n, payload, **columns):
    run = CircuitRun(kind=kind, design=design, n=n, payload=json.dumps(payload), **columns)
    db.session.add(run)
    db.session.commit()
    return run


# ------------------- BUILD -------------------
@circuit_routes.route('/build', methods=['POST'])
def build_circuit():
    start_time = datetime.datetime.now()
    try:
        data = request.get_json(silent=True)
        if not data:
            return jsonify({"error": "No data provided"}), 400

        design, n, m, color_width = _design_args(data)
        level = EmitLevel.parse(data.get("level", "macro"))
        logger.info(f"🔄 Building {design} n={n} ({level.value})")

        circuit = registry.build(design, n, m, color_width)
        report = registry.resource_report(design, circuit, n)
        run = _save_run("build", design, n, report, t_count=report["t_count"], qubits=report["qubits"])

        elapsed = (datetime.datetime.now() - start_time).total_seconds()
        logger.info(f"✅ Built {design} n={n} in {elapsed:.2f}s")
        return jsonify({
            "run_id": run.id,
            "report": report,
            "qasm": emit(circuit, level),
        }), 200

    except ValueError as e:
        db.session.rollback()
        logger.warning(f"❌ Build rejected: {e}")
        return jsonify({"error": str(e)}), 400
    except Exception as e:
        db.session.rollback()
        logger.exception(f"❌ Build failed: {e}")
        return jsonify({"error": f"Build failed: {str(e)}"}), 500


# ------------------- VERIFY -------------------
@circuit_routes.route('/verify', methods=['POST'])
def verify_circuit():
    try:
        data = request.get_json(silent=True)
        if not data:
            return jsonify({"error": "No data provided"}), 400

        design, n, m, color_width = _design_args(data)
        samples = data.get("samples")
        exhaustive = data.get("exhaustive", samples is None)
        report = registry.verify_design(
            design, n, m, color_width,
            exhaustive=bool(exhaustive),
            samples=None if samples is None else int(samples),
            seed=data.get("seed"),
            engine=data.get("engine", "boolean"),
        )
        result = report.to_dict()
        run = _save_run("verify", design, n, result, cases=report.cases, failures=len(report.failures))
        result["run_id"] = run.id

        # 422: the request was fine, the circuit is not
        return jsonify(result), 200 if report.passed else 422

    except ValueError as e:
        db.session.rollback()
        logger.warning(f"❌ Verification rejected: {e}")
        return jsonify({"error": str(e)}), 400
    except Exception as e:
        db.session.rollback()
        logger.exception(f"❌ Verification failed: {e}")
        return jsonify({"error": f"Verification failed: {str(e)}"}), 500


# ------------------- SIMULATE -------------------
@circuit_routes.route('/simulate', methods=['POST'])
def simulate_circuit():
    try:
        data = request.get_json(silent=True)
        if not data:
            return jsonify({"error": "No data provided"}), 400

        design, n, m, color_width = _design_args(data)
        inputs = {name: int(value) for name, value in (data.get("inputs") or {}).items()}
        result = registry.simulate_design(design, n, inputs, m, color_width,
                                          engine=data.get("engine", "boolean"))
        run = _save_run("simulate", design, n, result)
        result["run_id"] = run.id
        return jsonify(result), 200

    except ValueError as e:
        db.session.rollback()
        return jsonify({"error": str(e)}), 400
    except Exception as e:
        db.session.rollback()
        logger.exception(f"❌ Simulation failed: {e}")
        return jsonify({"error": f"Simulation failed: {str(e)}"}), 500


# ------------------- TABLES -------------------
@circuit_routes.route('/table/<int:which>', methods=['GET'])
def get_table(which):
    try:
        widths = request.args.getlist('n', type=int) or [4, 8, 16]
        return jsonify({
            "status": "success",
            "table": which,
            "rows": table_rows(which, widths)
        }), 200
    except ValueError as e:
        return jsonify({"error": str(e)}), 400
    except Exception as e:
        logger.exception(f"❌ Table error: {e}")
        return jsonify({"error": str(e)}), 500


# ------------------- HISTORY -------------------
@circuit_routes.route('/history', methods=['GET'])
def get_run_history():
    try:
        page = request.args.get('page', 1, type=int)
        per_page = request.args.get('per_page', 10, type=int)
        per_page = min(per_page, 50)  # Limit to 50 items per page
        kind = request.args.get('kind')

        query = CircuitRun.query
        if kind:
            if kind not in RUN_KINDS:
                return jsonify({"error": f"kind must be one of {', '.join(RUN_KINDS)}"}), 400
            query = query.filter_by(kind=kind)
        runs = query.order_by(CircuitRun.created_at.desc(), CircuitRun.id.desc())\
                    .paginate(page=page, per_page=per_page, error_out=False)

        return jsonify({
            'status': 'success',
            'history': [run.to_dict() for run in runs.items],
            'pagination': {
                'page': page,
                'per_page': per_page,
                'total': runs.total,
                'pages': runs.pages,
                'has_next': runs.has_next,
                'has_prev': runs.has_prev
            }
        })

    except Exception as e:
        logger.exception(f"❌ History error: {e}")
        return jsonify({'error': str(e)}), 500


@circuit_routes.route('/history/<int:run_id>', methods=['GET'])
def get_single_run(run_id):
    run = db.session.get(CircuitRun, run_id)
    if not run:
        return jsonify({'error': 'Run not found'}), 404
    return jsonify({'status': 'success', 'run': run.to_dict()})
