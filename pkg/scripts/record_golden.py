"""Record the golden C_10 session transcript from the live service.

Human Alice always claims the lowest-id legal vertex; the engine answers
as Bob.  The transcript freezes every request and response (session id
normalized to "golden") for the UI golden test and the server replay
test.  Run from the repo root:

    python scripts/record_golden.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from domgame.service import create_app

GRAPH_TEXT = "p 10 10\n" + "\n".join(f"e {i} {(i + 1) % 10}" for i in range(10)) + "\n"
OUT = Path(__file__).resolve().parents[1] / "frontend" / "fixtures" / "golden_c10.json"


def normalize(state: dict) -> dict:
    return json.loads(json.dumps(state, sort_keys=True))


def main() -> None:
    client = TestClient(create_app())
    steps = []

    create_body = {"graph": GRAPH_TEXT, "human": "A"}
    res = client.post("/api/games", json=create_body)
    res.raise_for_status()
    body = res.json()
    session_id = body["id"]
    state = body["state"]
    steps.append(
        {
            "request": {"method": "POST", "url": "/api/games", "body": create_body},
            "response": {"id": "golden", "state": normalize(state)},
        }
    )

    while state["status"] == "ongoing":
        vertex = next(v for v in range(state["n"]) if state["claims"][v] == "-")
        move_body = {"vertex": vertex}
        res = client.post(f"/api/games/{session_id}/moves", json=move_body)
        res.raise_for_status()
        state = res.json()
        steps.append(
            {
                "request": {"method": "POST", "url": "/api/games/golden/moves", "body": move_body},
                "response": normalize(state),
            }
        )

    assert state["status"] != "alice-dominates", "engine failed to hold the draw on C_10"
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"graph": GRAPH_TEXT, "steps": steps, "final_status": state["status"]}, indent=2, sort_keys=True) + "\n")
    print(f"wrote {OUT} ({len(steps)} steps, final status {state['status']})")


if __name__ == "__main__":
    main()
