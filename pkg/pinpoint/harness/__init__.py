from .generator import OntologyGenerator, Profile, generate_ontology, generate_suite
from .oracle import brute_force_justifications, brute_force_muses, muses_as_justifications, semantic_entails
from .bench import METHODS, check_agreement, prune_comparison, prune_effectiveness, run_bench, write_csv

__all__ = [
    "OntologyGenerator", "Profile", "generate_ontology", "generate_suite",
    "brute_force_justifications", "brute_force_muses", "muses_as_justifications", "semantic_entails",
    "METHODS", "check_agreement", "prune_comparison", "prune_effectiveness", "run_bench", "write_csv",
]
