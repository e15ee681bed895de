"""Command-line entry point wiring the pipeline stages.

Subcommands: ingest, sample, embed-train, train, detect, eval (sweep, ablate,
compare), trace. Every run writes a manifest (config snapshot, input/output
checksums, timestamps) next to its artifacts. A flat INI config file provides
defaults; flags override it.
"""
from __future__ import annotations

import argparse
import configparser
import datetime
import glob
import json
import subprocess
import sys
from dataclasses import asdict
from pathlib import Path

from . import __version__
from .corpus import (
    filter_names,
    load_traces,
    merge_types,
    read_dataset,
    split_dataset,
    type_frequencies,
    write_dataset,
)
from .detect import detect_warnings, emit_report, merge_for_scoring, score_pairs
from .embedding import TokenEmbedding, tokenize_corpus, train_subword_embedding
from .evalharness import (
    ABLATION_COMPONENTS,
    compare_neg_strategies,
    labels_of,
    run_ablation,
    threshold_sweep,
    write_metrics_jsonl,
    write_metrics_table,
)
from .negsample import build_labeled_dataset
from .net import ModelBundle, TrainConfig, examples_to_batch, predict_scores, train_model
from .records import file_checksum, read_labeled, write_labeled

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_WARNINGS = 4

_CONFIG_DEFAULTS = {
    "corpus": {"test_count": "600", "train_fraction": "0.8", "seed": "0", "top_types": "10"},
    "negsample": {"strategy": "type-guided", "seed": "0", "infreq_threshold": "0.03",
                  "d_source": "train"},
    "embed": {"dim": "100", "window": "5", "epochs": "5", "min_count": "2", "seed": "0"},
    "model": {"batch": "128", "epochs": "15", "lr": "1e-3", "dropout": "0.5", "seed": "0",
              "mask": ""},
    "detect": {"threshold": "0.5", "format": "human"},
    "eval": {"split": "test"},
}


class _Parser(argparse.ArgumentParser):
    # lint convention: unknown flags exit 1 with usage, not argparse's 2
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_FAILURE)


def load_config(path: str | None) -> configparser.ConfigParser:
    cp = configparser.ConfigParser()
    cp.read_dict(_CONFIG_DEFAULTS)
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            cp.read_file(fh)
    return cp


def _cfg_value(cp, section: str, key: str, override):
    return override if override is not None else cp.get(section, key)


def _expand_inputs(paths: list[str], suffix: str) -> list[Path]:
    out: list[Path] = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            out.extend(sorted(p.glob(f"*{suffix}")))
        elif any(ch in raw for ch in "*?["):
            out.extend(sorted(Path(g) for g in glob.glob(raw)))
        else:
            out.append(p)
    return out


def _utcnow() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


class Manifest:
    def __init__(self, command: str, argv: list[str], config: dict):
        self.data = {
            "command": command,
            "argv": argv,
            "config": config,
            "inputs": {},
            "outputs": {},
            "tool_version": __version__,
            "started_at": _utcnow(),
        }

    def add_input(self, path):
        p = Path(path)
        if p.is_file():
            self.data["inputs"][str(p)] = file_checksum(p)

    def add_output(self, path):
        p = Path(path)
        if p.is_file():
            self.data["outputs"][str(p)] = file_checksum(p)

    def write(self, path):
        self.data["finished_at"] = _utcnow()
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.data, fh, indent=2)
            fh.write("\n")


def _mask_from(arg: str) -> frozenset:
    return frozenset(m.strip() for m in arg.split(",") if m.strip())


def cmd_ingest(args, cp) -> int:
    traces = _expand_inputs(args.traces, ".jsonl")
    seed = int(_cfg_value(cp, "corpus", "seed", args.seed))
    test_count = int(_cfg_value(cp, "corpus", "test_count", args.test_count))
    train_fraction = float(_cfg_value(cp, "corpus", "train_fraction", args.train_fraction))
    top_types = int(cp.get("corpus", "top_types"))

    manifest = Manifest("ingest", sys.argv[1:], {
        "seed": seed, "test_count": test_count, "train_fraction": train_fraction,
        "top_types": top_types})
    for t in traces:
        manifest.add_input(t)

    pairs, ingest_rep = load_traces(traces)
    merged, merge_rep = merge_types(pairs, k=top_types)
    filtered, filter_rep = filter_names(merged)
    split = split_dataset(filtered, test_count=test_count,
                          train_fraction=train_fraction, seed=seed)
    table = type_frequencies(split.train, k=top_types)

    out = Path(args.out)
    ds_manifest = write_dataset(out, split, table)
    manifest.data["reports"] = {
        "ingest": {"files_loaded": ingest_rep.files_loaded,
                   "files_failed": ingest_rep.files_failed,
                   "lines_total": ingest_rep.lines_total,
                   "lines_skipped": ingest_rep.lines_skipped},
        "merge": {"frequent": merge_rep.frequent,
                  "merges": [{"from": a, "to": b, "count": c}
                             for (a, b), c in sorted(merge_rep.merges.items())]},
        "filter": {"removed_short": filter_rep.removed_short,
                   "removed_cryptic": filter_rep.removed_cryptic},
        "split": ds_manifest,
    }
    for part in ("train", "valid", "test"):
        manifest.add_output(out / f"{part}.jsonl")
    manifest.write(out / "manifest.json")
    print(f"ingest: {len(filtered)} pairs -> {out} "
          f"(train {len(split.train)}, valid {len(split.valid)}, test {len(split.test)})")
    return EXIT_OK


def cmd_sample(args, cp) -> int:
    strategy = _cfg_value(cp, "negsample", "strategy", args.strategy).replace("-", "_")
    seed = int(_cfg_value(cp, "negsample", "seed", args.seed))
    threshold = float(_cfg_value(cp, "negsample", "infreq_threshold", args.infreq_threshold))
    d_source = _cfg_value(cp, "negsample", "d_source", args.d_source)

    split, _table, ds_manifest = read_dataset(args.dataset)
    labeled = build_labeled_dataset(split, strategy, seed,
                                    d_source=d_source, infreq_threshold=threshold)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    manifest = Manifest("sample", sys.argv[1:], {
        "strategy": strategy, "seed": seed, "infreq_threshold": threshold,
        "d_source": d_source})
    manifest.add_input(Path(args.dataset) / "split_manifest.json")
    for part in ("train", "valid", "test"):
        path = out / f"{part}.jsonl"
        write_labeled(path, getattr(labeled, part), seed)
        manifest.add_output(path)
    # carried forward so downstream stages see the frozen frequent-type list
    with open(out / "frequent_types.json", "w", encoding="utf-8") as fh:
        json.dump({"frequent_types": ds_manifest["frequent_types"]}, fh)
        fh.write("\n")
    manifest.write(out / "manifest.json")
    print(f"sample[{strategy}]: wrote labeled sets to {out}")
    return EXIT_OK


def cmd_embed_train(args, cp) -> int:
    sources = _expand_inputs(args.sources, ".py")
    dim = int(_cfg_value(cp, "embed", "dim", args.dim))
    window = int(_cfg_value(cp, "embed", "window", args.window))
    epochs = int(_cfg_value(cp, "embed", "epochs", args.epochs))
    min_count = int(_cfg_value(cp, "embed", "min_count", args.min_count))
    seed = int(_cfg_value(cp, "embed", "seed", args.seed))

    sequences, report = tokenize_corpus(sources)
    emb = train_subword_embedding(sequences, dim=dim, window=window, epochs=epochs,
                                  min_count=min_count, seed=seed)
    emb.save(args.out)
    if args.export_text:
        emb.export_text(args.export_text)
    manifest = Manifest("embed-train", sys.argv[1:], {
        "dim": dim, "window": window, "epochs": epochs, "min_count": min_count,
        "seed": seed, "files_ok": report.files_ok,
        "files_skipped": len(report.files_skipped),
        "epoch_losses": emb.epoch_losses})
    for s in sources[:200]:
        manifest.add_input(s)
    manifest.add_output(args.out)
    manifest.write(str(args.out) + ".manifest.json")
    print(f"embed-train: {len(emb.words)} tokens, checksum {emb.checksum()[:12]} -> {args.out}")
    return EXIT_OK


def cmd_train(args, cp) -> int:
    batch = int(_cfg_value(cp, "model", "batch", args.batch))
    epochs = int(_cfg_value(cp, "model", "epochs", args.epochs))
    lr = float(_cfg_value(cp, "model", "lr", args.lr))
    dropout = float(_cfg_value(cp, "model", "dropout", args.dropout))
    seed = int(_cfg_value(cp, "model", "seed", args.seed))
    mask = _mask_from(_cfg_value(cp, "model", "mask", args.mask))

    labeled_dir = Path(args.labeled)
    train_set = read_labeled(labeled_dir / "train.jsonl")
    valid_set = read_labeled(labeled_dir / "valid.jsonl")
    emb = TokenEmbedding.load(args.embedding)
    frequent = _frequent_types_for(args, labeled_dir)

    cfg = TrainConfig(batch_size=batch, epochs=epochs, lr=lr, dropout=dropout,
                      seed=seed, mask=mask)
    bundle, history = train_model(cfg, train_set, valid_set, emb, frequent)
    bundle.save(args.out)
    history_path = str(args.out) + ".history.jsonl"
    with open(history_path, "w", encoding="utf-8") as fh:
        for row in history:
            fh.write(json.dumps(row) + "\n")

    manifest = Manifest("train", sys.argv[1:], {
        "batch": batch, "epochs": epochs, "lr": lr, "dropout": dropout, "seed": seed,
        "mask": sorted(mask), "frequent_types": frequent,
        "embedding_checksum": bundle.embedding_checksum})
    manifest.add_input(labeled_dir / "train.jsonl")
    manifest.add_input(labeled_dir / "valid.jsonl")
    manifest.add_input(args.embedding)
    manifest.add_output(args.out)
    manifest.add_output(history_path)
    manifest.write(str(args.out) + ".manifest.json")
    best = max((h["valid_f1"] for h in history if h["valid_f1"] is not None), default=None)
    print(f"train: best valid F1 {best} -> {args.out}")
    return EXIT_OK


def _frequent_types_for(args, labeled_dir: Path) -> list[str]:
    """The frozen frequent-type list: from --dataset if given, else from the
    file the sample stage drops next to its labeled sets."""
    if getattr(args, "dataset", None):
        _, _table, manifest = read_dataset(args.dataset)
        return manifest["frequent_types"]
    carried = labeled_dir / "frequent_types.json"
    if carried.exists():
        with open(carried, "r", encoding="utf-8") as fh:
            return json.load(fh)["frequent_types"]
    raise SystemExit("cannot locate frequent-type list; pass --dataset")


def cmd_detect(args, cp) -> int:
    threshold = float(_cfg_value(cp, "detect", "threshold", args.threshold))
    fmt = _cfg_value(cp, "detect", "format", args.format)
    emb = TokenEmbedding.load(args.embedding)
    bundle = ModelBundle.load(args.model, embedding=emb)

    traces = _expand_inputs(args.traces, ".jsonl")
    pairs, report = load_traces(traces)
    merged = merge_for_scoring(pairs, bundle.frequent_types)
    scored = score_pairs(bundle, emb, merged)
    warnings, suppressed = detect_warnings(scored, threshold)
    text = emit_report(warnings, fmt=fmt, dest=args.out)
    if args.out is None:
        sys.stdout.write(text)

    manifest = Manifest("detect", sys.argv[1:], {
        "threshold": threshold, "format": fmt,
        "pairs_scored": len(scored), "warnings": len(warnings),
        "suppressed": [{"name": sp.pair.name, "reason": r} for sp, r in suppressed],
        "lines_skipped": report.lines_skipped})
    manifest.add_input(args.model)
    manifest.add_input(args.embedding)
    for t in traces:
        manifest.add_input(t)
    if args.out:
        manifest.add_output(args.out)
        manifest.write(str(args.out) + ".manifest.json")
    print(f"detect: {len(warnings)} warnings ({len(suppressed)} suppressed) "
          f"at threshold {threshold}", file=sys.stderr)
    return EXIT_WARNINGS if warnings else EXIT_OK


def cmd_eval(args, cp) -> int:
    emb = TokenEmbedding.load(args.embedding)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    manifest = Manifest(f"eval-{args.eval_command}", sys.argv[1:], {
        "seed": int(_cfg_value(cp, "model", "seed", getattr(args, "seed", None))),
        "epochs": int(_cfg_value(cp, "model", "epochs", getattr(args, "epochs", None))),
    })

    if args.eval_command == "sweep":
        bundle = ModelBundle.load(args.model, embedding=emb)
        examples = read_labeled(Path(args.labeled) / f"{args.split}.jsonl")
        batch = examples_to_batch(examples, emb, bundle.frequent_types, bundle.train_cfg.mask)
        scores = predict_scores(bundle.params, batch, bundle.model_cfg)
        points, best = threshold_sweep(scores, labels_of(examples))
        write_metrics_jsonl(out / "sweep.jsonl", points,
                            meta={"best_threshold": best.threshold, "best_f1": best.f1,
                                  "split": args.split})
        write_metrics_table(out / "sweep.tsv", points)
        manifest.add_output(out / "sweep.jsonl")
        manifest.add_output(out / "sweep.tsv")
        print(f"eval sweep: best F1 {best.f1} at threshold {best.threshold}")
    elif args.eval_command == "ablate":
        train_set = read_labeled(Path(args.labeled) / "train.jsonl")
        valid_set = read_labeled(Path(args.labeled) / "valid.jsonl")
        frequent = _frequent_types_for(args, Path(args.labeled))
        base = TrainConfig(batch_size=int(cp.get("model", "batch")),
                           epochs=int(_cfg_value(cp, "model", "epochs", args.epochs)),
                           lr=float(cp.get("model", "lr")),
                           dropout=float(cp.get("model", "dropout")),
                           seed=int(_cfg_value(cp, "model", "seed", args.seed)))
        components = ABLATION_COMPONENTS
        if args.components:
            components = [tuple(c.split("+")) if c != "all" else ()
                          for c in args.components.split(",")]
        results = run_ablation(base, train_set, valid_set, emb, frequent, components)
        with open(out / "ablation.jsonl", "w", encoding="utf-8") as fh:
            for label, run in results.items():
                fh.write(json.dumps({"component": label, "best_valid_f1": run.best_valid_f1,
                                     "f1_curve": [h["valid_f1"] for h in run.history]}) + "\n")
        manifest.add_output(out / "ablation.jsonl")
        for label, run in sorted(results.items()):
            print(f"eval ablate: {label:25s} best valid F1 {run.best_valid_f1}")
    elif args.eval_command == "compare":
        split, table, ds_manifest = read_dataset(args.dataset)
        cfg = TrainConfig(batch_size=int(cp.get("model", "batch")),
                          epochs=int(_cfg_value(cp, "model", "epochs", args.epochs)),
                          lr=float(cp.get("model", "lr")),
                          dropout=float(cp.get("model", "dropout")),
                          seed=int(_cfg_value(cp, "model", "seed", args.seed)))
        report = compare_neg_strategies(split, emb, ds_manifest["frequent_types"],
                                        cfg, seed=int(_cfg_value(cp, "model", "seed", args.seed)))
        payload = {
            "seed": report.seed,
            "positives_checksum": report.positives_checksum,
            "results": {s: {"best_f1": r.best.f1, "best_threshold": r.best.threshold}
                        for s, r in report.results.items()},
        }
        with open(out / "compare.json", "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
        for strategy in ("type_guided", "random"):
            write_metrics_table(out / f"compare_{strategy}.tsv",
                                report.results[strategy].points)
        manifest.add_output(out / "compare.json")
        print("eval compare:",
              {s: round(r.best.f1, 4) for s, r in report.results.items()})
    manifest.write(out / f"manifest-{args.eval_command}.json")
    return EXIT_OK


def cmd_trace(args, cp) -> int:
    """Delegate to the tracer package (separate component) as a subprocess."""
    cmd = [sys.executable, "-m", "assigntracer", "trace", args.script,
           "--out", args.out, "--timeout", str(args.timeout)]
    if args.instrument:
        cmd.append("--instrument")
    try:
        proc = subprocess.run(cmd)
    except FileNotFoundError:
        print("error: tracer component not available", file=sys.stderr)
        return EXIT_FAILURE
    return proc.returncode


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nvlint",
                     description="Find name-value inconsistencies by learning from runtime traces.")
    parser.add_argument("--version", action="version", version=f"nvlint {__version__}")
    parser.add_argument("--config", default=None, help="INI config file; flags override it")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load traces, merge types, filter names, split")
    p.add_argument("--traces", nargs="+", required=True, help="trace files, dirs, or globs")
    p.add_argument("--out", required=True, help="dataset output directory")
    p.add_argument("--test-count", dest="test_count", default=None)
    p.add_argument("--train-fraction", dest="train_fraction", default=None)
    p.add_argument("--seed", default=None)

    p = sub.add_parser("sample", help="generate labeled datasets with negatives")
    p.add_argument("--dataset", required=True, help="ingest output directory")
    p.add_argument("--strategy", choices=["type-guided", "random"], default=None)
    p.add_argument("--seed", default=None)
    p.add_argument("--infreq-threshold", dest="infreq_threshold", default=None)
    p.add_argument("--d-source", dest="d_source", choices=["train", "all"], default=None)
    p.add_argument("--out", required=True)

    p = sub.add_parser("embed-train", help="train the subword name embedding")
    p.add_argument("--sources", nargs="+", required=True, help="source files, dirs, or globs")
    p.add_argument("--out", required=True, help="embedding output file")
    p.add_argument("--dim", default=None)
    p.add_argument("--window", default=None)
    p.add_argument("--epochs", default=None)
    p.add_argument("--min-count", dest="min_count", default=None)
    p.add_argument("--seed", default=None)
    p.add_argument("--export-text", dest="export_text", default=None)

    p = sub.add_parser("train", help="train the consistency classifier")
    p.add_argument("--labeled", required=True, help="sample output directory")
    p.add_argument("--embedding", required=True)
    p.add_argument("--dataset", default=None, help="ingest directory (frequent-type list)")
    p.add_argument("--out", required=True, help="model checkpoint file")
    p.add_argument("--batch", default=None)
    p.add_argument("--epochs", default=None)
    p.add_argument("--lr", default=None)
    p.add_argument("--dropout", default=None)
    p.add_argument("--seed", default=None)
    p.add_argument("--mask", default=None, help="comma-separated ablation components")

    p = sub.add_parser("detect", help="score traces and report warnings")
    p.add_argument("--model", required=True)
    p.add_argument("--embedding", required=True)
    p.add_argument("--traces", nargs="+", required=True)
    p.add_argument("--threshold", default=None)
    p.add_argument("--format", choices=["human", "machine"], default=None)
    p.add_argument("--out", default=None, help="report file (stdout if omitted)")

    p = sub.add_parser("eval", help="metrics sweeps, ablations, strategy comparison")
    ev = p.add_subparsers(dest="eval_command", required=True)
    s = ev.add_parser("sweep")
    s.add_argument("--model", required=True)
    s.add_argument("--embedding", required=True)
    s.add_argument("--labeled", required=True)
    s.add_argument("--split", default=None)
    s.add_argument("--out", required=True)
    a = ev.add_parser("ablate")
    a.add_argument("--labeled", required=True)
    a.add_argument("--embedding", required=True)
    a.add_argument("--dataset", default=None)
    a.add_argument("--components", default=None,
                   help="comma-separated: all,name,value_string,type,length,shape,type+value_string")
    a.add_argument("--epochs", default=None)
    a.add_argument("--seed", default=None)
    a.add_argument("--out", required=True)
    c = ev.add_parser("compare")
    c.add_argument("--dataset", required=True)
    c.add_argument("--embedding", required=True)
    c.add_argument("--epochs", default=None)
    c.add_argument("--seed", default=None)
    c.add_argument("--out", required=True)

    p = sub.add_parser("trace", help="instrument and run a script via the tracer component")
    p.add_argument("script")
    p.add_argument("--out", required=True)
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("--instrument", action="store_true", default=True,
                   help=argparse.SUPPRESS)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cp = load_config(args.config)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    handlers = {
        "ingest": cmd_ingest,
        "sample": cmd_sample,
        "embed-train": cmd_embed_train,
        "train": cmd_train,
        "detect": cmd_detect,
        "eval": cmd_eval,
        "trace": cmd_trace,
    }
    try:
        return handlers[args.command](args, cp)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
