# src/cli/commands/run_molecule_norm.py
from src.cli.constants.exit_codes import EXIT_OK
from src.cli.helpers.load_space_input import load_space_input
from src.cli.helpers.require_option import require_option
from src.cli.models.invocation import Invocation, RunResult
from src.documents.load_document import load_document
from src.documents.molecule_document import MoleculeDocument
from src.documents.report_documents import MoleculeNormDocument
from src.freespace.molecule_norm import molecule_norm


def run_molecule_norm(invocation: Invocation) -> RunResult:
    path = require_option(invocation.molecule, "--molecule", "molecule-norm")
    space, _ = load_space_input(invocation.space)
    mu = load_document(path, MoleculeDocument).to_molecule(space)
    return RunResult(EXIT_OK, MoleculeNormDocument.from_result(mu, molecule_norm(space, mu)))
