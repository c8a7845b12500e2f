"""smellforge: semi-automatic code smell dataset generation for Java corpora."""

__version__ = "0.1.0"
