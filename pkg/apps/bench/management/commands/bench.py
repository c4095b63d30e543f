"""Run or verify benchmark suites."""

from pathlib import Path
from typing import get_args

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.bench.loader import load_experiment
from apps.bench.outputs import emit_outputs, prepare_output_dir
from apps.bench.runner import run_suite
from apps.bench.selfcheck import self_checks
from apps.core.errors import BanditError
from apps.environment import NoiseVariant
from apps.policies import POLICY_NAMES


class Command(BaseCommand):
    """Run or verify benchmark suites."""

    help = "Run robust linear bandit benchmark suites (run) or only their invariant checks (verify)"
    requires_system_checks: list[str] = []

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest="action", required=True)
        for name, text in (
            ("run", "Run the suite and write CSV / JSON (and SVG with --plot)"),
            ("verify", "Run the library self-checks and the per-run invariant checks"),
        ):
            sub = actions.add_parser(name, help=text)
            sub.add_argument("--config", type=Path, help="Experiment JSON file")
            sub.add_argument("--algo", action="append", choices=POLICY_NAMES, help="Policy (repeatable)")
            sub.add_argument("--T", type=int, help="Horizon")
            sub.add_argument("--C", type=float, help="Corruption budget")
            sub.add_argument("--noise", choices=get_args(NoiseVariant), help="Noise variant")
            sub.add_argument("--seed", type=int, action="append", help="Seed (repeatable)")
            sub.add_argument("--out", type=Path, help="Output directory")
            sub.add_argument("--plot", action="store_true", help="Also write regret.svg and runtime.svg")

    def handle(self, *args, **options):
        try:
            config = load_experiment(
                options["config"],
                algos=options["algo"],
                T=options["T"],
                C=options["C"],
                noise=options["noise"],
                seeds=options["seed"],
                out=options["out"],
                plot=options["plot"],
            )
            if options["action"] == "verify":
                passed = self.verify(config)
            else:
                passed = self.run(config)
        except BanditError as exc:
            raise CommandError(f"{exc.code}: {exc.message}", returncode=1)
        if not passed:
            raise CommandError("one or more runs or invariant checks failed", returncode=1)

    def run(self, config):
        out_dir = prepare_output_dir(config.output_dir or settings.BENCH_OUTPUT_DIR)
        self.stdout.write(f"Running {', '.join(config.algos)} on {len(config.seeds)} seed(s), T={config.T}...")
        result = run_suite(config, threads=settings.BENCH_THREADS)
        written = emit_outputs(result.summary, result.runs, out_dir, plot=config.plot)
        self.report(result.summary.invariants, result.summary.failures)
        self.stdout.write(self.style.SUCCESS(f"Wrote {len(written)} file(s) to {out_dir}"))
        return result.summary.passed

    def verify(self, config):
        self.stdout.write("Running library self-checks...")
        checks = self_checks(config)
        result = run_suite(config, threads=settings.BENCH_THREADS)
        checks += result.summary.invariants
        self.report(checks, result.summary.failures)
        return not result.summary.failures and all(check.passed for check in checks)

    def report(self, checks, failures):
        for check in checks:
            line = f"{check.name} [{check.algo} seed={check.seed}] {check.value:.6g} <= {check.bound:.6g}"
            if check.note:
                line += f" ({check.note})"
            if check.passed:
                self.stdout.write(f"  ok    {line}")
            else:
                self.stdout.write(self.style.ERROR(f"  FAIL  {line}"))
        for failure in failures:
            self.stdout.write(
                self.style.ERROR(f"  run {failure.algo} seed={failure.seed} failed at round {failure.round}: {failure.message}")
            )
        passed = sum(check.passed for check in checks)
        self.stdout.write(self.style.SUCCESS(f"{passed}/{len(checks)} checks passed"))
