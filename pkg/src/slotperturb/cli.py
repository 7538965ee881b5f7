"""Command-line interface: perturb, build-random, build-hard, score,
baseline-predict, validate.

Every run takes an explicit master seed (``--seed N`` or ``--seed random``,
which prints the drawn seed) and writes a manifest recording the tool
version, resolved parameters and a config hash — no timestamps, so
identical configs rerun to byte-identical outputs. Exit codes: 0 success,
1 runtime error, 2 usage or configuration error.
"""

from __future__ import annotations

import functools
import hashlib
import json
import secrets
import sys
from pathlib import Path

import click

from . import __version__
from .builders import (
    BuiltSet,
    ConfidenceTable,
    build_hard_set,
    build_random_set,
    build_single_operator_set,
    canonical_json,
)
from .corpus import Dataset, parse_conll, write_conll
from .errors import ConfigError, CoverageError, ToolkitError
from .metrics import (
    Prediction,
    aggregate,
    baseline_confidences,
    load_predictions,
    render_aggregate,
    render_report_table,
    score,
    trivial_baseline_predict,
    write_predictions,
)
from .operators.base import (
    ALL_OPERATORS,
    BASELINE_OPERATORS,
    SPOKEN_OPERATORS,
    OperatorId,
)
from .resources import DEFAULT_MIN_FREQUENCY, load_bundle

_GROUPS = {
    "spoken": SPOKEN_OPERATORS,
    "baseline": BASELINE_OPERATORS,
    "all": ALL_OPERATORS,
}


def _guarded(fn):
    """Map toolkit errors to exit codes (config → 2, runtime → 1)."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CoverageError as e:
            click.echo(f"error: {e}", err=True)
            for uid, op in e.gaps:
                click.echo(f"  missing: id={uid} operator={op}", err=True)
            sys.exit(1)
        except ConfigError as e:
            click.echo(f"config error: {e}", err=True)
            sys.exit(2)
        except ToolkitError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(1)

    return wrapper


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        config = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file {path} is not valid JSON: {e}") from None
    if not isinstance(config, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return config


def _merge(config: dict, key: str, flag, default):
    """Flag wins over config file wins over default."""
    if flag is not None:
        return flag
    return config.get(key, default)


def _resolve_seed(flag, config: dict) -> int:
    raw = flag if flag is not None else config.get("seed")
    if raw is None:
        raise ConfigError("a master seed is required (--seed N or --seed random)")
    if isinstance(raw, str) and raw.lower() == "random":
        seed = secrets.randbits(64)
        click.echo(f"chosen seed: {seed}", err=True)
        return seed
    try:
        seed = int(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"seed must be an integer or 'random', got {raw!r}") from None
    if not 0 <= seed < 2 ** 64:
        raise ConfigError("seed must be an unsigned 64-bit integer")
    return seed


def _resolve_out(flag, config: dict) -> Path:
    raw = _merge(config, "out", flag, None)
    if raw is None:
        raise ConfigError("an output directory is required (--out DIR)")
    out = Path(raw)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _read_dataset(path: str) -> Dataset:
    p = Path(path)
    return parse_conll(p.read_text(encoding="utf-8"), name=p.stem)


def _resource_options(f):
    opts = [
        click.option("--pos-lexicon", "pos_lexicon", type=click.Path(), default=None,
                     help="POS lexicon file (word<TAB>POS)."),
        click.option("--stopwords", type=click.Path(), default=None,
                     help="Stopword file, one word per line."),
        click.option("--fillers", type=click.Path(), default=None,
                     help="Filler inventory JSON."),
        click.option("--synonyms", type=click.Path(), default=None,
                     help="Synonym dictionary (word<TAB>syn1,syn2,...)."),
        click.option("--contractions", type=click.Path(), default=None,
                     help="Contraction table (contracted<TAB>expanded)."),
        click.option("--pronunciations", type=click.Path(), default=None,
                     help="Pronunciation lexicon (word<TAB>SYM SYM ...)."),
        click.option("--frequencies", type=click.Path(), default=None,
                     help="Word frequency file (word<TAB>count)."),
        click.option("--min-frequency", type=int, default=None,
                     help=f"Frequency threshold (default {DEFAULT_MIN_FREQUENCY})."),
        click.option("--provider", type=click.Choice(["dictionary", "remote"]),
                     default=None, help="Synonym candidate source."),
        click.option("--remote-url", default=None,
                     help="Base URL of the candidate service for --provider remote."),
        click.option("--top-k", type=int, default=None,
                     help="Candidates requested per synonym swap (default 50)."),
        click.option("--verb-phrase/--no-verb-phrase", "verb_phrase", default=None,
                     help="Place post-verb fillers after the verb phrase."),
        click.option("--tag-overrides", "tag_overrides", type=click.Path(),
                     default=None, help="External tag file (id<TAB>TAG TAG ...)."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _bundle_from(config: dict, kw: dict):
    return load_bundle(
        pos_lexicon_path=_merge(config, "pos_lexicon", kw["pos_lexicon"], None),
        stopwords_path=_merge(config, "stopwords", kw["stopwords"], None),
        fillers_path=_merge(config, "fillers", kw["fillers"], None),
        synonyms_path=_merge(config, "synonyms", kw["synonyms"], None),
        contractions_path=_merge(config, "contractions", kw["contractions"], None),
        pronunciations_path=_merge(
            config, "pronunciations", kw["pronunciations"], None
        ),
        frequencies_path=_merge(config, "frequencies", kw["frequencies"], None),
        min_frequency=_merge(
            config, "min_frequency", kw["min_frequency"], DEFAULT_MIN_FREQUENCY
        ),
        provider=_merge(config, "provider", kw["provider"], "dictionary"),
        remote_url=_merge(config, "remote_url", kw["remote_url"], None),
        top_k=_merge(config, "top_k", kw["top_k"], 50),
        verb_phrase=_merge(config, "verb_phrase", kw["verb_phrase"], False),
        tag_overrides_path=_merge(config, "tag_overrides", kw["tag_overrides"], None),
    )


def _resource_params(config: dict, kw: dict) -> dict:
    """Resolved resource parameters, for the manifest."""
    keys = (
        "pos_lexicon", "stopwords", "fillers", "synonyms", "contractions",
        "pronunciations", "frequencies", "tag_overrides",
    )
    params = {k: _merge(config, k, kw[k], None) for k in keys}
    params["min_frequency"] = _merge(
        config, "min_frequency", kw["min_frequency"], DEFAULT_MIN_FREQUENCY
    )
    params["provider"] = _merge(config, "provider", kw["provider"], "dictionary")
    params["remote_url"] = _merge(config, "remote_url", kw["remote_url"], None)
    params["top_k"] = _merge(config, "top_k", kw["top_k"], 50)
    params["verb_phrase"] = _merge(config, "verb_phrase", kw["verb_phrase"], False)
    return params


def _write_manifest(out: Path, command: str, params: dict, outputs: list[str]):
    body = {
        "tool": "slotperturb",
        "version": __version__,
        "command": command,
        "parameters": params,
        "config_hash": hashlib.sha256(
            canonical_json(params).encode("utf-8")
        ).hexdigest(),
        "outputs": sorted(outputs),
    }
    (out / "manifest.json").write_text(
        canonical_json(body, pretty=True), encoding="utf-8"
    )


def _write_built(out: Path, built: BuiltSet) -> list[str]:
    conll = f"{built.dataset.name}.conll"
    sidecar = f"{built.dataset.name}.provenance.jsonl"
    (out / conll).write_text(write_conll(built.dataset), encoding="utf-8")
    (out / sidecar).write_text(built.provenance_jsonl(), encoding="utf-8")
    return [conll, sidecar]


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="slotperturb")
def main():
    """Label-preserving perturbation toolkit for slot-filling / intent
    detection evaluation corpora."""


@main.command()
@click.argument("dataset", type=click.Path(exists=True, dir_okay=False))
@_guarded
def validate(dataset):
    """Parse and structurally validate a dataset file."""
    d = _read_dataset(dataset)
    click.echo(
        f"OK: {len(d)} utterances, {len(d.intent_inventory)} intents, "
        f"{len(d.slot_inventory)} slot labels"
    )


@main.command()
@click.argument("dataset", type=click.Path(exists=True, dir_okay=False))
@click.option("--op", "op_name", required=True,
              type=click.Choice([o.value for o in ALL_OPERATORS]),
              help="Operator to apply to every utterance.")
@click.option("--seed", default=None, help="Master seed (integer or 'random').")
@click.option("--out", "-o", type=click.Path(file_okay=False), default=None,
              help="Output directory.")
@click.option("--config", "config_path", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON config file; flags override its values.")
@click.option("--workers", type=int, default=None,
              help="Worker threads (never changes outputs).")
@_resource_options
@_guarded
def perturb(dataset, op_name, seed, out, config_path, workers, **kw):
    """Apply one operator once to every utterance of DATASET."""
    config = _load_config(config_path)
    seed_val = _resolve_seed(seed, config)
    out_dir = _resolve_out(out, config)
    bundle = _bundle_from(config, kw)
    d = _read_dataset(dataset)
    built = build_single_operator_set(
        d, OperatorId(op_name), seed_val, bundle,
        workers=_merge(config, "workers", workers, 1),
    )
    files = _write_built(out_dir, built)
    params = _resource_params(config, kw)
    params.update({"dataset": dataset, "operator": op_name, "seed": seed_val})
    _write_manifest(out_dir, "perturb", params, files)
    noops = sum(p.noop for p in built.perturbations)
    click.echo(
        f"wrote {len(built.dataset)} utterances ({noops} no-ops) to {out_dir}"
    )


@main.command("build-random")
@click.argument("dataset", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", default=None, help="Master seed (integer or 'random').")
@click.option("--replicates", type=int, default=None,
              help="Number of replicate sets (default 10).")
@click.option("--operators", "group", type=click.Choice(sorted(_GROUPS)),
              default=None, help="Operator group to draw from (default spoken).")
@click.option("--out", "-o", type=click.Path(file_okay=False), default=None)
@click.option("--config", "config_path", default=None,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--workers", type=int, default=None)
@_resource_options
@_guarded
def build_random(dataset, seed, replicates, group, out, config_path, workers, **kw):
    """Build replicate sets with one uniformly drawn operator per utterance."""
    config = _load_config(config_path)
    seed_val = _resolve_seed(seed, config)
    out_dir = _resolve_out(out, config)
    bundle = _bundle_from(config, kw)
    d = _read_dataset(dataset)
    n_replicates = _merge(config, "replicates", replicates, 10)
    group_name = _merge(config, "operators", group, "spoken")
    sets = build_random_set(
        d, seed_val, replicates=n_replicates, resources=bundle,
        operators=_GROUPS[group_name],
        workers=_merge(config, "workers", workers, 1),
    )
    files: list[str] = []
    for built in sets:
        files.extend(_write_built(out_dir, built))
    params = _resource_params(config, kw)
    params.update({
        "dataset": dataset, "seed": seed_val, "replicates": n_replicates,
        "operators": group_name,
    })
    _write_manifest(out_dir, "build-random", params, files)
    click.echo(f"wrote {len(sets)} replicate sets of {len(d)} to {out_dir}")


@main.command("build-hard")
@click.argument("dataset", type=click.Path(exists=True, dir_okay=False))
@click.option("--confidences", "confidences_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Confidence JSONL covering every (id, operator) pair.")
@click.option("--seed", default=None, help="Master seed (integer or 'random').")
@click.option("--operators", "group", type=click.Choice(sorted(_GROUPS)),
              default=None, help="Operator group to select from (default spoken).")
@click.option("--out", "-o", type=click.Path(file_okay=False), default=None)
@click.option("--config", "config_path", default=None,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--workers", type=int, default=None)
@_resource_options
@_guarded
def build_hard(dataset, confidences_path, seed, group, out, config_path,
               workers, **kw):
    """Build the set applying each utterance's lowest-confidence operator."""
    config = _load_config(config_path)
    seed_val = _resolve_seed(seed, config)
    out_dir = _resolve_out(out, config)
    bundle = _bundle_from(config, kw)
    d = _read_dataset(dataset)
    table = ConfidenceTable.from_path(confidences_path)
    group_name = _merge(config, "operators", group, "spoken")
    built, report = build_hard_set(
        d, table, seed_val, bundle, operators=_GROUPS[group_name],
        workers=_merge(config, "workers", workers, 1),
    )
    files = _write_built(out_dir, built)
    (out_dir / "composition.txt").write_text(report.render(), encoding="utf-8")
    (out_dir / "composition.json").write_text(
        canonical_json(report.to_json(), pretty=True), encoding="utf-8"
    )
    files += ["composition.txt", "composition.json"]
    params = _resource_params(config, kw)
    params.update({
        "dataset": dataset, "seed": seed_val,
        "confidences": confidences_path, "operators": group_name,
    })
    _write_manifest(out_dir, "build-hard", params, files)
    click.echo(report.render(), nl=False)
    click.echo(f"wrote hard set of {len(d)} to {out_dir}")


def _read_predictions_any(path: str) -> list[Prediction]:
    """Prediction JSONL, or a dataset file reinterpreted as predictions."""
    if path.endswith(".conll"):
        d = _read_dataset(path)
        return [
            Prediction(utterance_id=u.id, intent=u.intent, slot_tags=u.tags)
            for u in d.utterances
        ]
    return load_predictions(path)


@main.command("score")
@click.argument("gold", required=False,
                type=click.Path(exists=True, dir_okay=False))
@click.argument("preds", nargs=-1, type=click.Path(exists=True, dir_okay=False))
@click.option("--pair", "pairs_opt", nargs=2, multiple=True,
              type=click.Path(exists=True, dir_okay=False),
              help="GOLD PRED pair; repeat for replicate sets with their own gold.")
@click.option("--repair", is_flag=True, default=False,
              help="Promote orphan I- tags to B- before chunk extraction.")
@click.option("--out", "-o", type=click.Path(file_okay=False), default=None,
              help="Also write report files to this directory.")
@_guarded
def score_cmd(gold, preds, pairs_opt, repair, out):
    """Score prediction files against gold datasets.

    Either GOLD PRED [PRED ...] (all scored against one gold) or repeated
    --pair GOLD PRED. More than one set adds a mean ± variance block.
    """
    if pairs_opt and (gold or preds):
        raise click.UsageError("use either GOLD PRED... or --pair, not both")
    if pairs_opt:
        pair_paths = [(g, p) for g, p in pairs_opt]
    else:
        if not gold or not preds:
            raise click.UsageError("provide GOLD and at least one PRED, or --pair")
        pair_paths = [(gold, p) for p in preds]

    rows = []
    for gold_path, pred_path in pair_paths:
        g = _read_dataset(gold_path)
        r = score(g, _read_predictions_any(pred_path), repair=repair)
        rows.append((Path(pred_path).stem, r))
    click.echo(render_report_table(rows), nl=False)
    agg = None
    if len(rows) > 1:
        agg = aggregate([r for _, r in rows])
        click.echo("")
        click.echo("mean ± variance over sets")
        click.echo(render_aggregate(agg), nl=False)

    if out is not None:
        out_dir = Path(out)
        out_dir.mkdir(parents=True, exist_ok=True)
        files = []
        for name, r in rows:
            fname = f"report~{name}.json"
            (out_dir / fname).write_text(
                canonical_json(r.to_json(), pretty=True), encoding="utf-8"
            )
            files.append(fname)
        (out_dir / "report.txt").write_text(
            render_report_table(rows), encoding="utf-8"
        )
        files.append("report.txt")
        if agg is not None:
            (out_dir / "aggregate.json").write_text(
                canonical_json(
                    {
                        f: {"mean": mv.mean, "variance": mv.variance}
                        for f, mv in agg.items()
                    },
                    pretty=True,
                ),
                encoding="utf-8",
            )
            files.append("aggregate.json")
        params = {
            "pairs": [list(p) for p in pair_paths], "repair": repair,
        }
        _write_manifest(out_dir, "score", params, files)


@main.command("baseline-predict")
@click.option("--train", "train_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Training dataset for the memorizing baseline.")
@click.option("--eval", "eval_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Dataset to predict.")
@click.option("--seed", default=None, help="Master seed (integer or 'random').")
@click.option("--out", "-o", type=click.Path(file_okay=False), default=None)
@click.option("--confidences/--no-confidences", "emit_confidences", default=None,
              help="Also emit per-(id, operator) confidence records (default on).")
@click.option("--config", "config_path", default=None,
              type=click.Path(exists=True, dir_okay=False))
@_resource_options
@_guarded
def baseline_predict(train_path, eval_path, seed, out, emit_confidences,
                     config_path, **kw):
    """Train the trivial memorizing baseline and emit predictions
    (and, by default, a confidence file usable by build-hard)."""
    config = _load_config(config_path)
    seed_val = _resolve_seed(seed, config)
    out_dir = _resolve_out(out, config)
    train_d = _read_dataset(train_path)
    eval_d = _read_dataset(eval_path)
    preds = trivial_baseline_predict(train_d, eval_d)
    (out_dir / "predictions.jsonl").write_text(
        write_predictions(preds), encoding="utf-8"
    )
    files = ["predictions.jsonl"]
    if _merge(config, "confidences", emit_confidences, True):
        bundle = _bundle_from(config, kw)
        table = baseline_confidences(train_d, eval_d, bundle, seed_val)
        (out_dir / "confidences.jsonl").write_text(
            table.to_jsonl(), encoding="utf-8"
        )
        files.append("confidences.jsonl")
    params = _resource_params(config, kw)
    params.update({"train": train_path, "eval": eval_path, "seed": seed_val})
    _write_manifest(out_dir, "baseline-predict", params, files)
    click.echo(f"wrote {len(preds)} predictions to {out_dir}")


if __name__ == "__main__":
    main()
