"""Command-line client for the orthocoords service.

Every compute command posts to the HTTP API: against a remote server when
``--server`` is given, otherwise against an in-process instance of the same
app.  Responses are written verbatim as JSON, so identical flags and seed
produce byte-identical output.

Exit codes: 0 success (all certificates passed, where applicable),
1 certificate failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys


def _parse_at(text):
    if text is None:
        return None
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse point {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthocoords",
        description="Curvature obstructions to orthogonal coordinates: "
                    "residual search, chart curvature, proof-step certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="write the JSON response to this file")
        p.add_argument("--server", help="base URL of a running service; in-process when omitted")

    p = sub.add_parser("check", help="search frames minimizing the obstruction residual")
    p.add_argument("--space", required=True,
                   help="model space 'flat:N|sphere:N|cp:M|hp:Q' or a chart spec/path")
    p.add_argument("--at", type=_parse_at, default=None,
                   help="comma-separated chart point (chart specs only)")
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--max-iters", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol-res", type=float, default=1e-10)
    p.add_argument("--tol-grad", type=float, default=1e-8)
    add_common(p)

    p = sub.add_parser("certify", help="run a proof-step certificate chain")
    p.add_argument("--space", required=True, help="cp:2 or hp:Q with Q >= 2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    add_common(p)

    p = sub.add_parser("curvature", help="frame curvature of a diagonal chart at a point")
    p.add_argument("--chart", required=True,
                   help="builtin 'flat:N|polar:N|sphere-stereo:N' or a chart JSON path")
    p.add_argument("--at", type=_parse_at, default=None,
                   help="comma-separated chart point; domain center when omitted")
    add_common(p)

    p = sub.add_parser("lemma", help="random-instance battery for the span decomposition lemma")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)

    p = sub.add_parser("report-merge", help="merge report JSON files into one document")
    p.add_argument("files", nargs="+", help="report files to merge")
    p.add_argument("--out", help="write the merged JSON to this file")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _client(server):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=None)
    import warnings

    with warnings.catch_warnings():
        # starlette warns about its httpx test-client backend; harmless here
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

        from .service.app import app

        return TestClient(app)


def _emit(content: bytes, out, summary: str | None = None) -> None:
    if out:
        with open(out, "wb") as fh:
            fh.write(content)
        if summary:
            print(summary)
    else:
        sys.stdout.buffer.write(content)
        sys.stdout.buffer.write(b"\n")
        sys.stdout.flush()


def _post(args, path: str, payload: dict):
    with _client(getattr(args, "server", None)) as client:
        return client.post(path, json=payload)


def _fail(resp) -> int:
    try:
        detail = resp.json().get("detail", resp.text)
    except Exception:
        detail = resp.text
    print(f"error: {detail}", file=sys.stderr)
    return 2


def cmd_check(args) -> int:
    payload = {
        "space": args.space,
        "at": args.at,
        "restarts": args.restarts,
        "max_iters": args.max_iters,
        "seed": args.seed,
        "tol_res": args.tol_res,
        "tol_grad": args.tol_grad,
    }
    resp = _post(args, "/check", payload)
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    summary = (f"{body['space']}: best_residual {body['best_residual']:.6e} "
               f"converged {body['converged']} ({body['restarts']} restarts, seed {body['seed']})")
    _emit(resp.content, args.out, summary)
    return 0


def cmd_certify(args) -> int:
    resp = _post(args, "/certify", {"space": args.space, "seed": args.seed,
                                    "trials": args.trials})
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    lines = [f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}" for r in body["results"]]
    _emit(resp.content, args.out, "\n".join(lines))
    if not args.out:
        print("\n".join(lines), file=sys.stderr)
    return 0 if body["all_passed"] else 1


def cmd_curvature(args) -> int:
    resp = _post(args, "/curvature", {"chart": args.chart, "at": args.at})
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    summary = (f"{body['chart']} at {body['at']}: koszul {body['koszul_deviation']:.3e}, "
               f"max distinct quadruple {body['max_distinct_quadruple']:.3e}")
    _emit(resp.content, args.out, summary)
    return 0


def cmd_lemma(args) -> int:
    resp = _post(args, "/lemma", {"trials": args.trials, "seed": args.seed})
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    summary = (f"lemma battery: {body['trials'] - body['failures']}/{body['trials']} "
               f"reconstructions, max residual {body['max_residual']:.3e}")
    _emit(resp.content, args.out, summary)
    return 0 if body["all_passed"] else 1


def cmd_report_merge(args) -> int:
    reports = []
    for path in args.files:
        try:
            with open(path) as fh:
                reports.append(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read {path}: {exc}", file=sys.stderr)
            return 2
    content = json.dumps({"reports": reports}, separators=(",", ":")).encode()
    _emit(content, args.out, f"merged {len(reports)} reports")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "check": cmd_check,
    "certify": cmd_certify,
    "curvature": cmd_curvature,
    "lemma": cmd_lemma,
    "report-merge": cmd_report_merge,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
