"""Braid groups of the disc, sphere and projective plane: presentations, coset
enumeration, Smith forms, Garside normal forms and a claim-verification suite."""

__version__ = "0.1.0"
