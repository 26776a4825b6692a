from .Node import *
from .Instance import StrategyInstance, validate, vertex_id, node_from_json
from .Engine import Transcript, ProbReport, run_sample, exact_success_prob, mc_success_prob, bad_axiom_prob, chernoff_halfwidth
from .Generator import GeneratorConfig, generate_instance
