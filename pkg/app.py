from flask import Flask, Response, request, jsonify
from flask_cors import CORS

from services.app_logic import COMMANDS, figure_command
from services.documents import load_document
from services.errors import TaxicabError
from services.figures import BUILTIN_SCENES
from services.storage import read_report

app = Flask(__name__)
CORS(app)


@app.route("/")
def index():
    return jsonify({
        "commands": sorted(COMMANDS),
        "figures": sorted(BUILTIN_SCENES),
    })


def _run(command: str):
    body = request.get_data(as_text=True)
    if not body.strip():
        return jsonify({"error": "Missing JSON body"}), 400

    try:
        # decimal literals are read as Decimal, never float
        return jsonify(COMMANDS[command](load_document(body)))
    except TaxicabError as e:
        return jsonify({"error": str(e)}), 400
    except Exception as e:
        app.logger.exception("command %s failed", command)
        return jsonify({"error": str(e)}), 500


@app.route("/classify", methods=["POST"])
def classify():
    return _run("classify")


@app.route("/circumcircle", methods=["POST"])
def circumcircle():
    return _run("circumcircle")


@app.route("/incircle", methods=["POST"])
def incircle():
    return _run("incircle")


@app.route("/angle", methods=["POST"])
def angle():
    return _run("angle")


@app.route("/figure/<name>")
def figure(name):
    try:
        return Response(figure_command(name), mimetype="image/svg+xml")
    except TaxicabError as e:
        return jsonify({"error": str(e)}), 404


@app.route("/report")
def report():
    doc = read_report()
    if doc is None:
        return jsonify({"error": "No property suite report yet"}), 404
    return jsonify(doc)


if __name__ == "__main__":
    app.run(debug=True)
