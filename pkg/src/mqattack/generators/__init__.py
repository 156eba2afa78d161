"""Equation-system generators and their instance statistics."""
from .aes import aes_instance, aes_stats, alpha_count, gen_aes, rijndael_encrypt, sbox_equations, sbox_table
from .bmq import dense_bmq_stats, gen_random_bmq, planted_point
from .combinatorial import cnf_satisfied, gen_3sat, gen_graph_iso, gen_subset_sum, graph_iso_nominal_T, random_3sat
from .keccak import gen_keccak, keccak_instance, keccak_stats
from .stats import InstanceStats, stats_of
from .trivium import gen_trivium, trivium_instance, trivium_stats

__all__ = [
    "InstanceStats", "stats_of",
    "gen_3sat", "cnf_satisfied", "random_3sat", "gen_subset_sum", "gen_graph_iso", "graph_iso_nominal_T",
    "gen_aes", "aes_instance", "aes_stats", "alpha_count", "rijndael_encrypt", "sbox_equations", "sbox_table",
    "gen_trivium", "trivium_instance", "trivium_stats",
    "gen_keccak", "keccak_instance", "keccak_stats",
    "gen_random_bmq", "planted_point", "dense_bmq_stats",
]
