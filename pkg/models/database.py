from flask_sqlalchemy import SQLAlchemy
from datetime import datetime
import json
import logging

logger = logging.getLogger(__name__)
db = SQLAlchemy()

RUN_KINDS = ("build", "verify", "simulate")


class CircuitRun(db.Model):
    __tablename__ = 'circuit_runs'

    id = db.Column(db.Integer, primary_key=True)
    kind = db.Column(db.String(20), nullable=False, index=True)  # build / verify / simulate
    design = db.Column(db.String(50), nullable=False, index=True)
    n = db.Column(db.Integer, nullable=False)

    # Build results
    t_count = db.Column(db.Integer)
    qubits = db.Column(db.Integer)

    # Verification results
    cases = db.Column(db.Integer)
    failures = db.Column(db.Integer)

    payload = db.Column(db.Text)  # JSON string of the full response
    created_at = db.Column(db.DateTime, default=datetime.utcnow, index=True)

    def to_dict(self):
        """Convert run to dictionary"""
        return {
            'id': self.id,
            'kind': self.kind,
            'design': self.design,
            'n': self.n,
            't_count': self.t_count,
            'qubits': self.qubits,
            'cases': self.cases,
            'failures': self.failures,
            'payload': json.loads(self.payload) if self.payload else {},
            'created_at': self.created_at.isoformat() if self.created_at else None
        }

    def __repr__(self):
        return f'<CircuitRun {self.id} - {self.kind} {self.design} n={self.n}>'


def init_db(app):
    """Initialize database with Flask app"""
    db.init_app(app)

    with app.app_context():
        db.create_all()
        logger.info("✅ Database tables created successfully")
