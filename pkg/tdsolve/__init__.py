"""Closed-form solutions of a time-dependent oscillator in three pictures."""


__version__ = "0.1.0"
