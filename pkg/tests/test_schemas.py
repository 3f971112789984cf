import random
from fractions import Fraction

import jsonschema
import pytest

from smashkit import schemas
from smashkit.hopf import preset_hopf, verify_hopf
from smashkit.modalg import h4_on_dual_numbers, q_dilation, verify_module_algebra
from smashkit.kernel import LinComb
from smashkit.seminorm import SeminormFamily, stability_scan, witness_divergence
from smashkit.smash import random_smash_element, to_json


@pytest.mark.parametrize("name", ["GroupZ", "SemigroupZplus", "SweedlerH4"])
def test_hopf_reports(name):
    jsonschema.validate(verify_hopf(preset_hopf(name), depth=2).to_json(), schemas.REPORT)


def test_module_algebra_report():
    jsonschema.validate(verify_module_algebra(h4_on_dual_numbers()).to_json(), schemas.REPORT)


def test_smash_elements():
    spec = q_dilation(Fraction(3, 5), group=True)
    rng = random.Random(0)
    for _ in range(10):
        jsonschema.validate(to_json(random_smash_element(spec, rng, gaussian=True)),
                            schemas.SMASH_ELEMENT)


def test_stability_reports():
    for f in (SeminormFamily.trunc(2), SeminormFamily.weighted(1)):
        doc = stability_scan(q_dilation(Fraction(1, 2)), f, LinComb.basis(1), 6).to_json()
        jsonschema.validate(doc, schemas.STABILITY)


def test_witness_table():
    jsonschema.validate(witness_divergence(Fraction(1, 2), 1, 3, 6).to_json(),
                        schemas.WITNESS_TABLE)


def test_rationals_are_strings():
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"re": 1, "im": "0"}, schemas.SCALAR)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"re": "0.5", "im": "0"}, schemas.SCALAR)


def test_schemas_are_valid_documents():
    for schema in [schemas.CLI_OUTPUT, *schemas.COMMANDS.values()]:
        jsonschema.Draft202012Validator.check_schema(schema)
