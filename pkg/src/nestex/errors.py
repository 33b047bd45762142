"""Exception hierarchy shared by all nestex modules."""


class NestexError(ValueError):
    """Base class for every error raised by nestex."""


class NotAPartialOrder(NestexError):
    pass


class NotALattice(NestexError):
    def __init__(self, a, b, what="supremum"):
        super().__init__(f"elements {a!r} and {b!r} have no {what}")
        self.pair = (a, b)


class NotGraded(NestexError):
    def __init__(self, chain1, chain2):
        super().__init__(
            f"maximal chains of different lengths: {chain1!r} vs {chain2!r}")
        self.chains = (chain1, chain2)


class NotComparable(NestexError):
    pass


class ExchangeFailure(NestexError):
    def __init__(self, b1, b2, x):
        super().__init__(f"basis exchange fails for B1={b1!r}, B2={b2!r}, x={x!r}")
        self.witness = (b1, b2, x)


class RankZeroTruncation(NestexError):
    pass


class NotABuildingSet(NestexError):
    def __init__(self, element):
        super().__init__(f"structural isomorphism fails at {element!r}")
        self.element = element


class MissingJoinIrreducible(NotABuildingSet):
    def __init__(self, element):
        NestexError.__init__(self, f"join-irreducible {element!r} missing from building set")
        self.element = element


class NotJoinIrreducible(NestexError):
    pass


class NotAFace(NestexError):
    pass


class NotMaximal(NestexError):
    pass


class NotInContraction(NestexError):
    pass


class NotNestedInput(NestexError):
    pass


class NonNegativeRequired(NestexError):
    pass


class NotStirling(NestexError):
    pass


class ZeroPolynomial(NestexError):
    pass


class SizeLimit(NestexError):
    pass


class UnknownCorpus(NestexError):
    pass


class NoGenerator(NestexError):
    pass


class NotInjective(NestexError):
    pass


class NotAdmissible(NestexError):
    pass
