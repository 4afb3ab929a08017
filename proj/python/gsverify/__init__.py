"""Verification engine for finite social choice rules.

Reports come back as plain dictionaries decoded from the engine's JSON.
"""

import json

from ._core import (
    CapExceeded,
    NotTopsOnly,
    ParseError,
    Rule,
    __version__,
    coalesce,
    decode_preference,
    encode_preference,
    enumerate_preferences,
    find_dictator,
    is_dictatorial_profile,
    is_efficient,
    is_manipulable_profile,
    is_minimally_rich,
    is_strategy_proof,
    is_tops_only,
    is_unanimous,
    restrict_to_two,
    run_cli,
    satisfies_property_t_star,
)
from . import _core


def find_manipulation(rule):
    return json.loads(_core._find_manipulation_json(rule))


def classify(rule, sets=False, path="tops", workers=1):
    return json.loads(_core._classify_json(rule, sets, path, workers))


def census(agents, alts, mode="exhaustive", seed=0, samples=10000, workers=1, space="all"):
    return json.loads(_core._census_json(agents, alts, mode, seed, samples, workers, space))


def verify_lemma(lemma_id, agents, alts, mode="exhaustive", seed=0, samples=10000, workers=1):
    return json.loads(
        _core._verify_lemma_json(lemma_id, agents, alts, mode, seed, samples, workers)
    )


def counterexample(agents):
    return json.loads(_core._counterexample_json(agents))
