"""Command-line front end.

Exit codes: 0 success, 1 verification failure or bad input, 2 the word's
Demazure product is not w0, 3 an internal consistency check failed.
"""

from __future__ import annotations

import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from .braidword import format_word, parse_word, random_valid_word, valid_words
from .clusterops import mutate_seq, parse_mutation_seq
from .errors import (AssumptionViolated, BadDemazure, BraidSeedError, ConfigurationError,
                     DivisionFailure, FactorizationFailure, InternalInconsistency,
                     NonIntegral, NotApplicable, NotMutable)
from .rootsys import parse_type

EXIT_FAIL, EXIT_DEMAZURE, EXIT_INTERNAL = 1, 2, 3
JOBS_ENV = "BRAIDSEED_JOBS"

_INTERNAL = (InternalInconsistency, NonIntegral, AssumptionViolated, DivisionFailure,
             FactorizationFailure)


def _fail(code: int, msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _guard(fn):
    """Map library errors to exit codes."""
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BadDemazure as exc:
            _fail(EXIT_DEMAZURE, f"{exc} (the Demazure product must be the longest element)")
        except _INTERNAL as exc:
            _fail(EXIT_INTERNAL, f"internal consistency: {type(exc).__name__}: {exc}")
        except (ConfigurationError, NotApplicable, NotMutable, ValueError) as exc:
            _fail(EXIT_FAIL, str(exc))
        except BraidSeedError as exc:
            _fail(EXIT_FAIL, f"{type(exc).__name__}: {exc}")
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _load(type_name, word_text):
    D = parse_type(type_name)
    return D, parse_word(word_text, D.rank)


def _emit(data: bytes | str, output):
    if isinstance(data, str):
        data = data.encode()
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _seed_text(seed) -> str:
    rows = [f"type {seed.cartan_type}  word {format_word(seed.word)}",
            f"solid   {list(seed.index)}",
            f"mutable {list(seed.mutable)}",
            f"frozen  {list(seed.frozen_sorted)}",
            f"d       {[seed.d[e] for e in seed.index]}",
            "B~ (rows: mutable then frozen; columns: mutable)"]
    from .seedbuild import json_layout
    r, c = json_layout(seed)
    for lab, row in zip(r, seed.extended(r, c)):
        rows.append(f"  {lab:>3}: {row}")
    return "\n".join(rows) + "\n"


@click.group()
def main():
    """Cluster seeds of double braid varieties."""


@main.command()
@click.option("--type", "type_name", required=True, help="Dynkin type, e.g. A2, B3, G2.")
@click.option("--word", required=True, help='Double braid word, e.g. "1 -2 1".')
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "text"]), default="json")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)
@click.option("--fold-check", is_flag=True, help="Also compare with the folded seed of the lift.")
@_guard
def seed(type_name, word, fmt, output, fold_check):
    """Build the seed of a word."""
    from .seedbuild import build_seed, export_seed, really_full_rank
    D, w = _load(type_name, word)
    s = build_seed(D, w)
    if fmt == "text":
        text = _seed_text(s) + f"really full rank: {really_full_rank(s)}\n"
        _emit(text, output)
    else:
        _emit(export_seed(s, fmt), output)
    if fold_check:
        from .folding import cross_check, folding_for
        rep = cross_check(folding_for(D), w)
        click.echo(f"fold-check: {'pass' if rep.passed else 'FAIL ' + rep.detail}", err=True)
        if not rep.passed:
            sys.exit(EXIT_FAIL)


def _plan_dict(plan) -> dict:
    out = {"word": format_word(plan.word), "target": format_word(plan.target),
           "mutations": list(plan.mutations),
           "relabel": {str(k): v for k, v in sorted(plan.relabel.items())},
           "steps": [s.label() for s in plan.steps]}
    if plan.witness is not None:
        out["witness"] = {str(k): v for k, v in sorted(plan.witness.items())}
    if not plan.seeded:
        out["seeded"] = False
    return out


@main.command()
@click.option("--type", "type_name", required=True)
@click.option("--word", required=True)
@click.option("--list", "list_", is_flag=True, help="List the applicable moves.")
@click.option("--move", "move_text", default=None, help="Apply a move, e.g. B3@2.")
@click.option("--conjugate", is_flag=True, help="Apply the conjugation move.")
@click.option("--verify", "do_verify", is_flag=True, help="Check the move against both seeds.")
@_guard
def moves(type_name, word, list_, move_text, conjugate, do_verify):
    """List, apply or verify double braid moves."""
    from .moves import (apply_move, conjugation_move, enumerate_moves, parse_move,
                        resolve_move, verify_move)
    D, w = _load(type_name, word)
    if conjugate:
        click.echo(json.dumps(_plan_dict(conjugation_move(D, w)), sort_keys=True))
        return
    if move_text:
        mv = resolve_move(D, w, parse_move(move_text))
        if do_verify:
            rep = verify_move(D, w, mv)
            click.echo(json.dumps({"move": mv.label(), "target": format_word(rep.target),
                                   "passed": rep.passed, "checks": rep.checks,
                                   "detail": rep.detail}, sort_keys=True))
            if not rep.passed:
                click.echo(rep.repro(D.name), err=True)
                sys.exit(EXIT_FAIL)
            return
        click.echo(json.dumps(_plan_dict(apply_move(D, w, mv)), sort_keys=True))
        return
    for mv in enumerate_moves(D, w):
        flags = [f for f in ("solid", "special", "mutation", "long") if getattr(mv, f)]
        click.echo(f"{mv.label()}\t{mv.left}..{mv.right}\t{','.join(flags) or '-'}")


@main.command()
@click.option("--type", "type_name", required=True)
@click.option("--word", required=True)
@click.option("--seq", required=True, help='Mutation sequence, e.g. "4 3 4" or "mu(4,3,4)".')
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "text"]), default="json")
@_guard
def mutate(type_name, word, seq, fmt):
    """Mutate the seed of a word (the last index of the sequence goes first)."""
    from dataclasses import replace
    from .seedbuild import build_seed, export_seed
    D, w = _load(type_name, word)
    s = build_seed(D, w)
    m = mutate_seq(s, parse_mutation_seq(seq))
    s2 = replace(s, B=m.B, monomials=None, ord=None, omega_coeffs=None)
    if fmt == "text":
        _emit(_seed_text(s2), None)
    else:
        _emit(export_seed(s2, fmt), None)


@main.command()
@click.option("--type", "type_name", required=True, help="Multiply-laced type.")
@click.option("--word", required=True)
@click.option("--lift", is_flag=True, help="Print the lifted word and position map.")
@_guard
def fold(type_name, word, lift):
    """Lift a word to the simply-laced cover and cross-check the seeds."""
    from .folding import cross_check, describe, folding_for, lift_word
    D, w = _load(type_name, word)
    F = folding_for(D)
    if lift:
        L = lift_word(F, w)
        click.echo(json.dumps({"folding": describe(F), "lifted": format_word(L.word),
                               "lambda": list(L.lam)}, sort_keys=True))
        return
    rep = cross_check(F, w)
    click.echo(json.dumps({"folding": describe(F), "lifted": format_word(rep.lifted),
                           "passed": rep.passed, "checks": rep.checks, "detail": rep.detail},
                          sort_keys=True))
    if not rep.passed:
        sys.exit(EXIT_FAIL)


# --- verification suites ----------------------------------------------------

def check_oracle(D, word):
    from .gamma import ord_table
    from .oracle import ord_oracle
    eng = ord_table(D, word).entries
    orc = ord_oracle(D, word, _oracle_for(D))
    return [] if eng == orc else [f"ord tables differ at {sorted(set(eng.items()) ^ set(orc.items()))[:3]}"]


def _oracle_for(D):
    from .oracle import shared_oracle
    return shared_oracle(D, 16)


def check_moves(D, word):
    from .moves import enumerate_moves, verify_move
    out = []
    for mv in enumerate_moves(D, word):
        rep = verify_move(D, word, mv)
        if not rep.passed:
            out.append(f"{mv.label()}: {rep.detail}")
    return out


def check_fold(D, word):
    from .folding import cross_check, folding_for
    rep = cross_check(folding_for(D), word)
    return [] if rep.passed else [rep.detail]


def check_aps(D, word):
    from .gamma import aps_zero_check
    bad = aps_zero_check(D, word)
    return [f"APS mismatch at {bad[:3]}"] if bad else []


def check_rank(D, word):
    from .seedbuild import build_seed, really_full_rank
    return [] if really_full_rank(build_seed(D, word)) else ["not really full rank"]


SUITES = {"oracle": check_oracle, "moves": check_moves, "fold": check_fold,
          "aps": check_aps, "rank": check_rank}


def _run_chunk(args):
    suite, type_name, words = args
    D = parse_type(type_name)
    fn = SUITES[suite]
    out = []
    for w in words:
        try:
            errs = fn(D, w)
        except BraidSeedError as exc:
            errs = [f"{type(exc).__name__}: {exc}"]
        out.append((w, errs))
    return out


def run_suite(suite: str, D, words, jobs: int = 1):
    """[(word, [errors])] in the order of ``words``."""
    words = list(words)
    if jobs <= 1 or len(words) < 2:
        return _run_chunk((suite, D.name, words))
    size = max(1, len(words) // (jobs * 4))
    chunks = [(suite, D.name, words[i:i + size]) for i in range(0, len(words), size)]
    with ProcessPoolExecutor(jobs) as pool:
        return [r for part in pool.map(_run_chunk, chunks) for r in part]


@main.command()
@click.option("--type", "type_name", required=True)
@click.option("--max-len", type=int, default=6, help="Exhaustive up to this length.")
@click.option("--samples", type=int, default=0, help="Sample this many words instead.")
@click.option("--seed", "rng_seed", type=int, default=0, help="RNG seed for sampling.")
@click.option("--positive", is_flag=True, help="Only positive letters.")
@click.option("--oracle", "suites", flag_value="oracle", multiple=True)
@click.option("--moves", "suites", flag_value="moves", multiple=True)
@click.option("--fold", "suites", flag_value="fold", multiple=True)
@click.option("--aps", "suites", flag_value="aps", multiple=True)
@click.option("--rank", "suites", flag_value="rank", multiple=True)
@click.option("--jobs", type=int, default=lambda: int(os.environ.get(JOBS_ENV, "1")),
              help=f"Worker processes (default ${JOBS_ENV} or 1).")
@_guard
def verify(type_name, max_len, samples, rng_seed, positive, suites, jobs):
    """Run verification suites and print a JSON summary."""
    D = parse_type(type_name)
    suites = list(dict.fromkeys(suites)) or ["aps", "rank"]
    if "oracle" in suites and D.letter != "A":
        raise ConfigurationError("the oracle suite needs a type A root system")
    if samples:
        rng = random.Random(rng_seed)
        words = [random_valid_word(D, rng.randint(D.n_pos_roots, max_len), rng, not positive)
                 for _ in range(samples)]
    else:
        words = valid_words(D, max_len, signed=not positive)
    summary, failed = {}, False
    for suite in suites:
        results = run_suite(suite, D, words, jobs)
        fails = [(w, e) for w, e in results if e]
        summary[suite] = {"words": len(results), "failures": len(fails),
                          "examples": [{"word": format_word(w), "errors": e,
                                        "repro": f'seed --type {D.name} --word "{format_word(w)}"'}
                                       for w, e in fails[:5]]}
        failed = failed or bool(fails)
    click.echo(json.dumps({"type": D.name, "max_len": max_len, "samples": samples,
                           "suites": summary}, sort_keys=True))
    if failed:
        sys.exit(EXIT_FAIL)


if __name__ == "__main__":
    main()
