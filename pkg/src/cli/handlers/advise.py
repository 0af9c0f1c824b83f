"""Recommend and lint command handlers."""

import logging
from argparse import Namespace

from src.cli.manifest import load_manifest
from src.cli.pipeline import RunOptions, exit_status, resolve_setup
from src.cli.report import render_lint, render_recommendation, write_report


async def recommend_command(args: Namespace) -> int:
    """
    Print the recommended evaluation plan of a manifest.

    Args:
        args: Parsed command-line arguments.

    Returns:
        int: Exit status of the plan's own lint findings.
    """
    manifest = load_manifest(args.manifest)
    options = RunOptions.from_args(args)
    setup = resolve_setup(manifest, options, recommend_only=True)
    plan = setup.plan.to_dict()
    # Overrides may change the configs the plan was linted with
    plan['warnings'] = [f.to_dict() for f in setup.findings]
    for entry, (_, config) in zip(plan['indicators'], setup.entries):
        entry['config'] = config.to_dict()

    text = render_recommendation(plan)
    if options.out is not None:
        write_report(plan, text, options.out / 'plan.json')
    print(text, end='')
    logging.info(f"Plan recommended for {manifest.path} with {len(plan['indicators'])} indicators")
    return exit_status(setup.findings, options.strict)


async def lint_command(args: Namespace) -> int:
    """
    Lint the evaluation setup of a manifest.

    Args:
        args: Parsed command-line arguments.

    Returns:
        int: 0 without findings, 1 with warnings, 2 with errors.
    """
    manifest = load_manifest(args.manifest)
    options = RunOptions.from_args(args)
    setup = resolve_setup(manifest, options)
    findings = [f.to_dict() for f in setup.findings]
    indicators = [name for name, _ in setup.entries]

    text = render_lint(findings, indicators)
    if options.out is not None:
        write_report({'indicators': indicators, 'lint': findings}, text, options.out / 'lint.json')
    print(text, end='')
    return exit_status(setup.findings, options.strict)
