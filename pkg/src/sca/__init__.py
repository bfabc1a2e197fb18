"""Semi-classical arithmetic toolkit.

Submodules:

- formulas: first-order arithmetic AST, parser, printer, evaluation
- hierarchy: quantifier-alternation classification and class lattice
- duality: the prenex dual operator and its laws
- principles: catalog of restricted classical principle schemas
- ipc: intuitionistic propositional decision procedure
- derivability: Horn-rule closure engine over the principle lattice
- cli: command-line front end
"""

__version__ = "0.1.0"
