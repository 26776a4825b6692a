from .Vm import ISA_VERSION, Instruction, ToyProgram, VmState, assemble, decode, encode, vm_run, trace_digest, literal_program
from .Table import Caps, ComplexityTable, build_table, programs, k_t, k_final
from .Experiments import counting_check, sample_axiom, sample_rate, AxiomSample, compute_Tn, compute_Tn_factor2, \
    halting_bound_check, calibrate_margin, HaltingReport, x_max, factor2_check, HalfAxiomSet, incompressibility_strategy
