import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import (FIG_A, FIG_CD, FIG_CG, FIG_E, FIG_FAN, FIG_H, FIG_S, FIG_SIGMA,
                    FIG_SIGMA_ROWS, FIG_STRATAJOS, FIG_T, FIG_WORD, FIG_ZM, THETA_WORD)
from jasso.encoder import emit_word
from jasso.geometry import decode
from jasso.tokens import ALPHABET
from jasso.words import (GRAMMARS, LexError, grammar_classify, matches, stratajos, tokenize,
                         validate, validate_tokens)


@pytest.fixture(scope="module")
def fig():
    rep = validate(FIG_WORD)
    assert rep.valid, rep.summary()
    return rep.analysis


def test_tables(fig):
    assert fig.E == FIG_E
    assert {g: fig.sigma[g] for g in fig.E} == FIG_SIGMA
    assert {X: fig.Sigma[X] for X in fig.nj} == FIG_SIGMA_ROWS
    assert {g: h for g, h in fig.H.items() if h} == FIG_H
    assert fig.A == FIG_A
    assert fig.Cg == FIG_CG and fig.Cd == FIG_CD


def test_chain_parts(fig):
    assert fig.G[3] == [4] and all(not v for k, v in fig.G.items() if k != 3)
    assert fig.Rd[11] == [12, 14] and fig.Rg[23] == [24, 25]
    assert fig.Rk[2] == [[3, 9, 31, 32]] and fig.Rk[9] == [[22, 29]] and fig.Rk[14] == [[15, 18]]
    assert fig.R[9] == [22, 29]


def test_fans_and_pinched_zoucs(fig):
    assert fig.fan == FIG_FAN
    assert set(fig.Zm) == FIG_ZM
    assert fig.dG[3] == [5, 6]
    assert {k: v for k, v in fig.T.items() if v} == FIG_T
    assert {k: v for k, v in fig.S.items() if v} == FIG_S


def test_stratajos(fig):
    assert sorted(stratajos(fig)) == sorted(FIG_STRATAJOS)


def test_summary(fig):
    assert validate(FIG_WORD).summary() == "valid: 11 pairs, 12 monomials, length 34"


def test_theta_is_valid():
    assert validate(THETA_WORD).valid


def test_tokenize_comments_and_errors():
    assert tokenize("zc+ mr+ # note\nsn+") == ["zc+", "mr+", "sn+"]
    with pytest.raises(LexError) as e:
        tokenize("zc+ xx")
    assert e.value.position == 2


@pytest.mark.parametrize("name, text, ok", [
    ("ramajo", "sn+ sn- ch", True),
    ("ramajo", "sn+ sn- tc+ tc- cu ch", True),
    ("ramajo", "tc+ tc- cu ch", False),
    ("d_ramajo", "sn+ sn- tc+ tc-", True),
    ("g_ramajo", "cu sn+ sn- ch", True),
    ("stratajo", "sn+ sn- ba ln+ ln- ca ch", True),
    ("stratajo", "sn+ sn- ba ch", False),
    ("lounafan", "ba ln+ ln- ln+ ln- ca", True),
    ("trenagatte", "tc+ tc- cu tc+ tc- cu", True),
    ("trouglyre", "tg+ tg-", True),
])
def test_grammars(name, text, ok):
    assert matches(name, text.split()) == ok


def test_simple_lounafan_is_most_specific():
    assert grammar_classify(["ba", "ca"])[0] == "simple_lounafan"
    assert set(GRAMMARS) >= {"ramajo", "stratajo", "lounafan"}


# hand-made defects with the rule that catches each one
t = FIG_WORD.split()
MUTATIONS = [
    ("drop last closer", t[:-1], 1),
    ("only the root pair", ["zc+", "zc-"], 1),
    ("root pair replaced", t[:1] + ["sn+"] + t[2:32] + ["sn-"] + t[33:], 1),
    ("ln directly under mr", t[:2] + ["ln+"] + t[3:7] + ["ln-"] + t[8:], 2),
    ("missing chain end", t[:17] + t[18:], 3),
    ("cu turned into ch", t[:23] + ["ch"] + t[24:], 3),
    ("tg pair turned into tc", t[:3] + ["tc+"] + t[4:6] + ["tc-"] + t[7:], 3),
    ("missing cu", t[:30] + t[31:], 3),
    ("theta without ch", THETA_WORD.replace(" ch", "").split(), 3),
    ("ba and ca swapped", t[:4] + [t[5], t[4]] + t[6:], 4),
    ("extra ba", t[:9] + ["ba"] + t[9:], 4),
    ("missing ca", t[:18] + t[19:], 4),
]


@pytest.mark.parametrize("label, toks, rule", MUTATIONS, ids=[m[0] for m in MUTATIONS])
def test_mutation_caught_by_rule(label, toks, rule):
    rep = validate_tokens(toks)
    assert not rep.valid
    assert rep.rule == rule
    assert rep.violations and all(v.rule == rule for v in rep.violations)


def _single_edits(toks):
    for i in range(len(toks)):
        yield toks[:i] + toks[i + 1:]
        for a in ALPHABET:
            yield toks[:i] + [a] + toks[i + 1:]
    for i in range(len(toks) - 1):
        yield toks[:i] + [toks[i + 1], toks[i]] + toks[i + 2:]


def test_every_single_edit_is_rejected_or_is_another_code():
    # a mutant that passes must be the word of the map it decodes to
    accepted = 0
    for m in _single_edits(t):
        rep = validate_tokens(m)
        if rep.valid:
            accepted += 1
            assert emit_word(decode(m).map) == " ".join(m)
        else:
            assert rep.violations
    assert accepted == 35


tokens = st.lists(st.sampled_from(ALPHABET), max_size=24)


@settings(max_examples=300, deadline=None)
@given(tokens)
def test_validator_is_total(toks):
    rep = validate_tokens(toks)
    assert rep.valid == (not rep.violations)
    if not rep.valid:
        assert rep.rule in (1, 2, 3, 4, 5)


@settings(max_examples=200, deadline=None)
@given(tokens)
def test_random_words_wrapped_in_root_pairs(toks):
    rep = validate_tokens(["zc+", "mr+"] + toks + ["mr-", "zc-"])
    if rep.valid:
        w = " ".join(["zc+", "mr+"] + toks + ["mr-", "zc-"])
        assert emit_word(decode(w).map) == w
