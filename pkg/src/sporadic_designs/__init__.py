"""Block-transitive point-primitive 2-(v,k,2) designs with sporadic socle."""
__version__ = "0.1.0"
