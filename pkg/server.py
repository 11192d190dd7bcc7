from flask import Flask, jsonify
from flask_cors import CORS
from routes.circuitRoutes import circuit_routes
from models.database import init_db
from utils import config
from dotenv import load_dotenv
import logging
import time

logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
logging.getLogger('werkzeug').setLevel(logging.WARNING)

load_dotenv()


def create_app(database_url=None):
    app = Flask(__name__)

    app.config['JSON_SORT_KEYS'] = False
    app.config['JSONIFY_PRETTYPRINT_REGULAR'] = False

    # Run history store; in-memory SQLite unless DATABASE_URL is set
    app.config['SQLALCHEMY_DATABASE_URI'] = database_url or config.database_url()
    app.config['SQLALCHEMY_TRACK_MODIFICATIONS'] = False
    if app.config['SQLALCHEMY_DATABASE_URI'].startswith('postgres'):
        app.config['SQLALCHEMY_ENGINE_OPTIONS'] = {
            'pool_size': 10,
            'pool_recycle': 120,
            'pool_pre_ping': True,
            'max_overflow': 20,
            'pool_timeout': 30
        }

    # CORS setup
    CORS(app, resources={
        r"/*": {
            "origins": [
                config.frontend_url(),
                "http://localhost:5173",
                "http://127.0.0.1:5173",
            ],
            "methods": ["GET", "POST", "OPTIONS"],
            "allow_headers": ["Content-Type"],
        }
    })

    try:
        init_db(app)
    except Exception as e:
        logging.getLogger(__name__).error(f"❌ Database connection failed: {e}")
        raise e

    @app.route('/')
    def index():
        return jsonify({
            "status": "success",
            "message": "Server is running successfully",
            "database_status": "connected"
        }), 200

    @app.route('/health')
    def health_check():
        """Simple health check without heavy operations"""
        return jsonify({
            "status": "healthy",
            "message": "Server is running",
            "timestamp": time.strftime('%Y-%m-%d %H:%M:%S')
        }), 200

    app.register_blueprint(circuit_routes)
    return app


app = create_app()

if __name__ == '__main__':
    print("🚀 Server running on http://localhost:5000")
    app.run(debug=True)
