"""Regime taxonomy of the oscillator family."""
import warnings
from ._constants import eps
from ._params import (check_params, check_picture, is_close, is_case1,
                      critical_time)


CASE1 = "Case1"
CASE2 = "Case2"

B_GT = "B_GT"
B_LT = "B_LT"
CRITICAL = "CRITICAL"

T_LT = "T_LT"
T_EQ = "T_EQ"
T_GT = "T_GT"

_subclass_tokens = {T_LT: "t_o<|1-a|/2w", T_EQ: "t_o=|1-a|/2w",
                    T_GT: "t_o>|1-a|/2w"}


class SystemKey(object):
    """Regime label of a parameter set in a given picture.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    case : str
        CASE1 (a = 1) or CASE2 (a != 1)

    regime_class : str
        B_GT, B_LT or CRITICAL, comparing b with -1 (Case 1) or a - 2

    subclass : str or None
        T_LT, T_EQ or T_GT for critical Case-2 systems, comparing t_o with
        |1 - a| / (2 w)

    sign_tag : int or None
        Sign of 1 - a for critical Case-2 systems

    harmonic : bool, optional (default: False)
        The system reduces to a constant-frequency oscillator in the TO
        picture ({1;-1} or b = -a)
    """
    def __init__(self, picture, case, regime_class, subclass=None,
                 sign_tag=None, harmonic=False):
        self.picture = picture
        self.case = case
        self.regime_class = regime_class
        self.subclass = subclass
        self.sign_tag = sign_tag
        self.harmonic = harmonic

    @property
    def is_critical(self):
        return self.regime_class == CRITICAL

    @property
    def notation(self):
        """Row label in brace notation, e.g. '{1;-1}'."""
        if self.case == CASE1 and self.is_critical:
            return "{1;-1}"
        if self.picture == "TO":
            if self.case == CASE1:
                return {B_GT: "{1;(-1,inf)}",
                        B_LT: "{1;(-inf,-1)}"}[self.regime_class]
            prefix = "!=1"
        else:
            prefix = "!=0"
        if self.is_critical:
            if self.picture != "TO":
                prefix = "!=0,1"
            return "{%s;a-2;%s}" % (prefix, _subclass_tokens[self.subclass])
        return {B_GT: "{%s;(a-2,inf)}",
                B_LT: "{%s;(-inf,a-2)}"}[self.regime_class] % prefix

    @property
    def union_notation(self):
        """Union of the two non-critical rows this key belongs to."""
        if self.is_critical:
            return None
        if self.picture == "TO":
            if self.case == CASE1:
                return "{1;!=-1}"
            return "{!=1;!=a-2}"
        return "{!=0;!=a-2}"

    def as_tuple(self):
        return (self.picture, self.case, self.regime_class, self.subclass,
                self.sign_tag, self.harmonic)

    def __eq__(self, other):
        return (isinstance(other, SystemKey) and
                self.as_tuple() == other.as_tuple())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "SystemKey(%s%s)" % (self.picture, self.notation)


def classify(p, picture="TO", eps=eps):
    """Classify a parameter set into its regime.

    Boundaries (b = -1, b = a - 2, t_o = |1 - a| / (2 w), b = -a) are
    resolved with a relative tolerance. Parameters within the tolerance of
    a boundary are assigned to the boundary class.

    Parameters
    ----------
    p : Params
        Parameters

    picture : str, optional (default: 'TO')
        'TO', 'TM' or 'TQ'

    eps : float, optional (default: 1e-12)
        Relative tolerance of boundary comparisons

    Returns
    -------
    key : SystemKey
        Regime label

    Raises
    ------
    ValueError
        If the parameters are invalid or a = 0 is requested in the TM or
        TQ picture
    """
    p = check_params(p)
    picture = check_picture(picture)
    if picture != "TO" and is_close(p.a, 0.0, eps):
        raise ValueError(
            "a=0: transformation is the identity; the %s picture requires "
            "a != 0, got a=%r" % (picture, p.a))

    case1 = is_case1(p.a, eps)
    case = CASE1 if case1 else CASE2
    boundary = -1.0 if case1 else p.a - 2.0

    if is_close(p.b, boundary, eps):
        if p.b != boundary:
            warnings.warn("b=%r is within the tolerance of the critical "
                          "value %r and is treated as critical"
                          % (p.b, boundary))
        if case1:
            return SystemKey(picture, case, CRITICAL, harmonic=True)
        t_crit = critical_time(p)
        if is_close(p.t_o, t_crit, eps):
            subclass = T_EQ
        elif p.t_o < t_crit:
            subclass = T_LT
        else:
            subclass = T_GT
        sign_tag = 1 if 1.0 - p.a > 0.0 else -1
        return SystemKey(picture, case, CRITICAL, subclass, sign_tag)

    regime_class = B_GT if p.b > boundary else B_LT
    harmonic = not case1 and is_close(p.b, -p.a, eps)
    return SystemKey(picture, case, regime_class, harmonic=harmonic)


def key_string(p, key):
    """Serialize a regime as key string.

    Parameters
    ----------
    p : Params
        Parameters

    key : SystemKey
        Regime label of p

    Returns
    -------
    s : str
        Key string, e.g. 'TM{a=3;b=1;crit;t_o>|1-a|/2w;-}'
    """
    tokens = ["a=%g" % p.a, "b=%g" % p.b]
    if key.is_critical:
        tokens.append("crit")
        if key.subclass is not None:
            tokens.append(_subclass_tokens[key.subclass])
            tokens.append("+" if key.sign_tag > 0 else "-")
    else:
        boundary = "-1" if key.picture == "TO" and key.case == CASE1 \
            else "a-2"
        relation = ">" if key.regime_class == B_GT else "<"
        tokens.append("b%s%s" % (relation, boundary))
    return "%s{%s}" % (key.picture, ";".join(tokens))
