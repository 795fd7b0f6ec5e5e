from .ontology_io import load_ontology, parse_goal, parse_ontology, save_ontology, serialize_ontology

__all__ = ["load_ontology", "parse_goal", "parse_ontology", "save_ontology", "serialize_ontology"]
