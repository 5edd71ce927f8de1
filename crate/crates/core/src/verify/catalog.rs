//! The encoded claims, one entry per checkable equality or inequality.
//!
//! Polynomial claims are written in the expression language, so each entry
//! reads like the relation it encodes.

use super::laws::Law;

/// How a claim is checked.
#[derive(Debug, Clone)]
pub enum Check {
    /// `lhs = rhs` as polynomials.
    Equal { lhs: String, rhs: String },
    /// `lhs ≠ rhs` as polynomials.
    NotEqual { lhs: String, rhs: String },
    /// `lhs(x..) ≠ rhs(x..)` for some choice of operands; `{0}`, `{1}`, ...
    /// in the templates are replaced by operands and `{p}` by a bracket pair.
    Exists {
        lhs: &'static str,
        rhs: &'static str,
        arity: usize,
        operands: &'static [&'static str],
        over_pairs: bool,
    },
    /// A law over quaternion values, checked by [`super::laws`].
    Law(Law),
    /// No value can be encoded for the claim.
    Opaque,
}

#[derive(Debug, Clone)]
pub struct Identity {
    pub id: String,
    pub location: &'static str,
    pub claim: String,
    pub check: Check,
}

fn eq(id: impl Into<String>, location: &'static str, lhs: &str, rhs: &str) -> Identity {
    Identity {
        id: id.into(),
        location,
        claim: format!("{lhs} = {rhs}"),
        check: Check::Equal {
            lhs: lhs.into(),
            rhs: rhs.into(),
        },
    }
}

fn ne(id: &str, location: &'static str, lhs: &str, rhs: &str) -> Identity {
    Identity {
        id: id.into(),
        location,
        claim: format!("{lhs} != {rhs}"),
        check: Check::NotEqual {
            lhs: lhs.into(),
            rhs: rhs.into(),
        },
    }
}

fn law(id: &str, location: &'static str, claim: &str, l: Law) -> Identity {
    Identity {
        id: id.into(),
        location,
        claim: claim.into(),
        check: Check::Law(l),
    }
}

const PAPER_OPERANDS: &[&str] = &["q", "qbar", "q^2", "qbar^2"];

/// `(id suffix, lhs, claimed value)` for the bracket table of `q`, `qbar`.
const BRACKET_TABLE: &[(&str, &str, &str)] = &[
    ("qq_ab", "pb_ab(q, q)", "0"),
    ("qq_ac", "pb_ac(q, q)", "0"),
    ("qq_ad", "pb_ad(q, q)", "0"),
    ("qbarqbar_ab", "pb_ab(qbar, qbar)", "0"),
    ("qbarqbar_ac", "pb_ac(qbar, qbar)", "0"),
    ("qbarqbar_ad", "pb_ad(qbar, qbar)", "0"),
    ("qqbar_bc", "pb_bc(q, qbar)", "0"),
    ("qqbar_bd", "pb_bd(q, qbar)", "0"),
    ("qqbar_cd", "pb_cd(q, qbar)", "0"),
    ("qbarq_bc", "pb_bc(qbar, q)", "0"),
    ("qbarq_bd", "pb_bd(qbar, q)", "0"),
    ("qbarq_cd", "pb_cd(qbar, q)", "0"),
    ("qq_bc", "pb_bc(q, q)", "2 k"),
    ("qbarqbar_bc", "pb_bc(qbar, qbar)", "2 k"),
    ("qqbar_ad", "pb_ad(q, qbar)", "-2 k"),
    ("qbarq_ad", "pb_ad(qbar, q)", "2 k"),
    ("qq_bd", "pb_bd(q, q)", "-2 j"),
    ("qbarqbar_bd", "pb_bd(qbar, qbar)", "-2 j"),
    ("qqbar_ac", "pb_ac(q, qbar)", "-2 j"),
    ("qbarq_ac", "pb_ac(qbar, q)", "2 j"),
    ("qq_cd", "pb_cd(q, q)", "2 i"),
    ("qbarqbar_cd", "pb_cd(qbar, qbar)", "2 i"),
    ("qqbar_ab", "pb_ab(q, qbar)", "-2 i"),
    ("qbarq_ab", "pb_ab(qbar, q)", "2 i"),
];

/// Each chain: its head, then every expression printed as equal to it.
const CHAINS: &[(&str, &str, &[&str])] = &[
    (
        "ab",
        "pb_ab(q, q^2)",
        &[
            "pb_ab(q^2, q)",
            "-pb_cd(q, q^2) + 4 i a",
            "pb_cd(q^2, q) - 4 i a",
            "-pb_ab(q, qbar^2) - 4 i a - 4 b",
            "-pb_ab(qbar^2, q) + 4 i a + 4 b",
            "-pb_cd(q, qbar^2) - 4 i a",
            "pb_cd(qbar^2, q) + 4 i a",
            "-pb_ab(qbar, q^2) + 4 i a - 4 b",
            "-pb_ab(q^2, qbar) - 4 i a + 4 b",
            "pb_cd(qbar, q^2) + 4 i a",
            "-pb_cd(q^2, qbar) - 4 i a",
            "pb_ab(qbar, qbar^2)",
            "pb_ab(qbar^2, qbar)",
            "pb_cd(qbar, qbar^2) - 4 i a",
            "-pb_cd(qbar^2, qbar) + 4 i a",
            "-2 b + 2 i a - 2 i q",
            "-2 k c + 2 j d",
        ],
    ),
    (
        "ac",
        "pb_ac(q, q^2)",
        &[
            "-pb_ac(q^2, q)",
            "-pb_bd(q, q^2) - 4 j a",
            "pb_bd(q^2, q) + 4 j a",
            "pb_ac(q, qbar^2) + 4 j a + 4 c",
            "-pb_ac(qbar^2, q) + 4 j a + 4 c",
            "-pb_bd(q, qbar^2) + 4 j a",
            "pb_bd(qbar^2, q) - 4 j a",
            "pb_ac(qbar, q^2) - 4 j a + 4 c",
            "pb_ac(q^2, qbar) + 4 j a - 4 c",
            "pb_bd(qbar, q^2) - 4 j a",
            "-pb_bd(q^2, qbar) + 4 j a",
            "-pb_ac(qbar, qbar^2)",
            "-pb_ac(qbar^2, qbar)",
            "pb_bd(qbar, qbar^2) + 4 j a",
            "-pb_bd(qbar^2, qbar) - 4 j a",
            "-2 c + 2 j a - 2 j q",
            "-2 k b + 2 i d",
        ],
    ),
    (
        "ad",
        "pb_ad(q, q^2)",
        &[
            "-pb_ad(q^2, q)",
            "pb_bc(q, q^2) - 4 k a",
            "-pb_bc(q^2, q) + 4 k a",
            "pb_ad(q, qbar^2) + 4 k a + 4 d",
            "pb_ad(qbar^2, q) - 4 k a - 4 d",
            "pb_bc(q, qbar^2) + 4 k a",
            "-pb_bc(qbar^2, q) - 4 k a",
            "pb_ad(qbar, q^2) - 4 k a + 4 d",
            "pb_ad(q^2, qbar) + 4 k a - 4 d",
            "-pb_bc(qbar, q^2) - 4 k a",
            "pb_bc(q^2, qbar) + 4 k a",
            "-pb_ad(qbar, qbar^2)",
            "-pb_ad(qbar^2, qbar)",
            "-pb_bc(qbar, qbar^2) + 4 k a",
            "pb_bc(qbar^2, qbar) - 4 k a",
            "-2 d + 2 k a - 2 k q",
            "2 j b - 2 i c",
        ],
    ),
];

const STAR_TABLE: &[(&str, &str)] = &[
    (
        "star(q, q)",
        "q^2 + nu (k Theta_bc - j Theta_bd + i Theta_cd)",
    ),
    (
        "star(q, qbar)",
        "q qbar - nu (i Theta_ab + j Theta_ac + k Theta_ad)",
    ),
    (
        "star(qbar, q)",
        "qbar q + nu (i Theta_ab + j Theta_ac + k Theta_ad)",
    ),
    (
        "star(qbar, qbar)",
        "qbar^2 + nu (k Theta_bc - j Theta_bd + i Theta_cd)",
    ),
];

const CUBIC_STAR_TABLE: &[(&str, &str)] = &[
    (
        "star(q, q^2)",
        "q^3 + nu (Theta_ab (-k c + j d) + Theta_ac (-k b + i d) + Theta_ad (j b - i c) \
         + Theta_bc (2 k a + j b - i c) + Theta_bd (-2 j a + k b - i d) + Theta_cd (2 i a + k c - j d))",
    ),
    (
        "star(q^2, q)",
        "q^3 + nu (Theta_ab (-k c + j d) + Theta_ac (k b - i d) + Theta_ad (-j b + i c) \
         + Theta_bc (2 k a - j b + i c) + Theta_bd (-2 j a - k b + i d) + Theta_cd (2 i a - k c + j d))",
    ),
    (
        "star(q, qbar^2)",
        "q qbar^2 + nu (Theta_ab (-2 i a - 2 b + k c - j d) \
         + Theta_ac (-2 j a - k b - 2 c + i d) + Theta_ad (-2 k a + j b - i c - 2 d) \
         + Theta_bc (-2 k a + j b - i c) + Theta_bd (2 j a + k b - i d) + Theta_cd (-2 i a + k c - j d))",
    ),
    (
        "star(qbar^2, q)",
        "qbar^2 q + nu (Theta_ab (2 i a + 2 b + k c - j d) \
         + Theta_ac (2 j a + k b + 2 c - i d) + Theta_ad (2 k a + j b - i c + 2 d) \
         + Theta_bc (-2 k a - j b + i c) + Theta_bd (2 j a - k b + i d) + Theta_cd (-2 i a - k c + j d))",
    ),
    (
        "star(qbar, q^2)",
        "qbar q^2 + nu (Theta_ab (2 i a - 2 b + k c - j d) \
         + Theta_ac (2 j a - k b - 2 c + i d) + Theta_ad (2 k a + j b - i c - 2 d) \
         + Theta_bc (-2 k a - j b + i c) + Theta_bd (2 j a - k b + i d) + Theta_cd (-2 i a - k c + j d))",
    ),
    (
        "star(q^2, qbar)",
        "q^2 qbar + nu (Theta_ab (-2 i a + 2 b + k c - j d) \
         + Theta_ac (-2 j a - k b + 2 c + i d) + Theta_ad (-2 k a + j d - i c + 2 d) \
         + Theta_bc (-2 k a + j b - i c) + Theta_bd (2 j a + k b - i d) + Theta_cd (-2 i a + k c - j d))",
    ),
    (
        "star(qbar, qbar^2)",
        "qbar^3 + nu (Theta_ab (-k c + j d) + Theta_ac (k b - i d) + Theta_ad (-j b + i c) \
         + Theta_bc (2 k a - j b + i c) + Theta_bd (-2 j a - k b + i d) + Theta_cd (2 i a - k c + j d))",
    ),
    (
        "star(qbar^2, qbar)",
        "qbar^3 + nu (Theta_ab (-k c + j d) + Theta_ac (k b - i d) + Theta_ad (-j b + i c) \
         + Theta_bc (2 k a + j b - i c) + Theta_bd (-2 j a + k b - i d) + Theta_cd (2 i a + k c - j d))",
    ),
];

/// Products of group elements printed as relations, `(lhs factors, value)`.
const GROUP_RELATIONS: &[(&[&str], &str)] = &[
    (&["i", "i"], "-1"),
    (&["j", "j"], "-1"),
    (&["k", "k"], "-1"),
    (&["-1", "-1"], "1"),
    (&["-1", "i"], "-i"),
    (&["-1", "j"], "-j"),
    (&["-1", "k"], "-k"),
    (&["i", "j"], "k"),
    (&["j", "i"], "-k"),
    (&["j", "k"], "i"),
    (&["k", "j"], "-i"),
    (&["k", "i"], "j"),
    (&["i", "k"], "-j"),
];

pub fn catalog() -> Vec<Identity> {
    let mut out = Vec::new();

    for (n, (factors, value)) in GROUP_RELATIONS.iter().enumerate() {
        out.push(law(
            &format!("V0.{}", n + 1),
            "Eq. (2)",
            &format!("{} = {value}", factors.join(" * ")),
            Law::GroupRelation { factors, value },
        ));
    }
    out.push(law(
        "V0.14",
        "Eq. (2)",
        "{1, -1, i, -i, j, -j, k, -k} is closed under multiplication with unit 1",
        Law::GroupClosure,
    ));

    out.push(law(
        "V1.sum",
        "Eq. (3)",
        "conj(q1 + q2) = conj(q1) + conj(q2)",
        Law::ConjAdditive,
    ));
    out.push(law(
        "V1.product",
        "Eq. (3)",
        "conj(q1 q2) = conj(q1) conj(q2)",
        Law::ConjProductUnreversed,
    ));
    out.push(eq("V1.involution", "Eq. (3)", "conj(conj(q))", "q"));
    out.push(eq("V1.real", "Eq. (3)", "conj(a)", "a"));

    out.push(eq(
        "V2.q_qbar",
        "Eq. (4)",
        "q qbar",
        "a^2 + b^2 + c^2 + d^2",
    ));
    out.push(eq(
        "V2.qbar_q",
        "Eq. (4)",
        "qbar q",
        "a^2 + b^2 + c^2 + d^2",
    ));
    out.push(eq(
        "V2.conj_norm",
        "Eq. (4)",
        "qbar conj(qbar)",
        "q conj(q)",
    ));
    out.push(law(
        "V2.triangle",
        "Eq. (4)",
        "|q1 + q2| <= |q1| + |q2|",
        Law::Triangle,
    ));
    out.push(law(
        "V2.multiplicative",
        "Eq. (4)",
        "|q1 q2| = |q1| |q2|",
        Law::NormMultiplicative,
    ));

    out.push(law(
        "V3.unit",
        "Eq. (5)",
        "q conj(q) / |q|^2 = 1",
        Law::InverseUnit,
    ));
    out.push(law(
        "V3.inverse",
        "Eq. (5)",
        "q^-1 = conj(q) / |q|^2 is a two-sided inverse",
        Law::InverseTwoSided,
    ));

    out.push(law(
        "V4.add_comm",
        "Eq. (6)",
        "q1 + q2 = q2 + q1",
        Law::AddCommutative,
    ));
    out.push(law(
        "V4.add_assoc",
        "Eq. (6)",
        "q1 + (q2 + q3) = (q1 + q2) + q3",
        Law::AddAssociative,
    ));
    out.push(law(
        "V4.noncomm",
        "Eq. (6)",
        "q1 q2 != q2 q1",
        Law::MulNoncommutative,
    ));
    out.push(law(
        "V4.mul_assoc",
        "Eq. (6)",
        "q1 (q2 q3) = (q1 q2) q3",
        Law::MulAssociative,
    ));
    out.push(law(
        "V4.distrib",
        "Eq. (6)",
        "q1 (q2 + q3) = q1 q2 + q1 q3",
        Law::Distributive,
    ));
    out.push(ne("V4.fn_noncomm", "Eq. (7)", "(i q) q", "q (i q)"));
    out.push(eq(
        "V4.fn_assoc",
        "Eq. (7)",
        "((i q) (j qbar)) q^2",
        "(i q) ((j qbar) q^2)",
    ));

    for (suffix, lhs, rhs) in BRACKET_TABLE {
        out.push(eq(format!("V5.{suffix}"), "Eq. (14)", lhs, rhs));
    }

    for pair in ["ab", "ac", "ad", "bc", "bd", "cd"] {
        out.push(eq(
            format!("V6.{pair}"),
            "Eq. (14)",
            &format!("pb_{pair}(q, qbar)"),
            &format!("-pb_{pair}(qbar, q)"),
        ));
    }

    for (pair, head, links) in CHAINS {
        for (n, link) in links.iter().enumerate() {
            out.push(eq(format!("V7.{pair}.{}", n + 1), "Eq. (15)", head, link));
        }
    }

    for (n, (lhs, rhs)) in STAR_TABLE.iter().enumerate() {
        out.push(eq(format!("V8.{}", n + 1), "Eq. (16)", lhs, rhs));
    }

    out.push(ne(
        "V9.1",
        "Eq. (17)",
        "conj(star(q, q))",
        "star(qbar, qbar)",
    ));
    out.push(eq(
        "V9.2",
        "Eq. (17)",
        "conj(star(q, qbar))",
        "star(qbar, q)",
    ));
    out.push(Identity {
        id: "V9.3".into(),
        location: "Eq. (17)",
        claim: "star(f, g) != star(g, f) in general".into(),
        check: Check::Exists {
            lhs: "star({0}, {1})",
            rhs: "star({1}, {0})",
            arity: 2,
            operands: PAPER_OPERANDS,
            over_pairs: false,
        },
    });
    out.push(Identity {
        id: "V9.4".into(),
        location: "Eq. (17)",
        claim: "conj(star(f, g)) != star(conj(f), conj(g)) in general".into(),
        check: Check::Exists {
            lhs: "conj(star({0}, {1}))",
            rhs: "star(conj({0}), conj({1}))",
            arity: 2,
            operands: PAPER_OPERANDS,
            over_pairs: false,
        },
    });

    out.push(eq(
        "V10.1.step",
        "Eq. (18)",
        "star(q, q^2)",
        "star(q, star(q, q) - nu (k Theta_bc - j Theta_bd + i Theta_cd))",
    ));
    out.push(eq(
        "V10.2.step",
        "Eq. (18)",
        "star(q^2, q)",
        "star(star(q, q) - nu (k Theta_bc - j Theta_bd + i Theta_cd), q)",
    ));
    for (n, (lhs, rhs)) in CUBIC_STAR_TABLE.iter().enumerate() {
        out.push(eq(format!("V10.{}", n + 1), "Eq. (18)", lhs, rhs));
    }
    out.push(Identity {
        id: "V10.structure".into(),
        location: "Eq. (18)",
        claim: "the structure of these star products reflects the quaternion group".into(),
        check: Check::Opaque,
    });

    out.push(ne(
        "V11.noncomm_q2",
        "Eq. (18)",
        "star(q^2, q)",
        "star(q, q^2)",
    ));
    out.push(ne("V11.assoc_qqq", "Eq. (19)", "assoc(q, q, q)", "0"));
    out.push(ne("V11.assoc_qqqbar", "Eq. (19)", "assoc(q, q, qbar)", "0"));
    out.push(ne("V11.assoc_qqbarq", "Eq. (19)", "assoc(q, qbar, q)", "0"));
    out.push(Identity {
        id: "V11.assoc_general".into(),
        location: "Eq. (19)",
        claim: "star(star(f, g), h) != star(f, star(g, h)) in general".into(),
        check: Check::Exists {
            lhs: "star(star({0}, {1}), {2})",
            rhs: "star({0}, star({1}, {2}))",
            arity: 3,
            operands: PAPER_OPERANDS,
            over_pairs: false,
        },
    });
    out.push(Identity {
        id: "V11.antisymmetry".into(),
        location: "Eq. (15)",
        claim: "{f, g}_mn != -{g, f}_mn in several cases".into(),
        check: Check::Exists {
            lhs: "pb_{p}({0}, {1})",
            rhs: "-pb_{p}({1}, {0})",
            arity: 2,
            operands: PAPER_OPERANDS,
            over_pairs: true,
        },
    });
    out.push(Identity {
        id: "V11.jacobi".into(),
        location: "Eq. (15)",
        claim: "the Jacobi identity fails for some component bracket".into(),
        check: Check::Exists {
            lhs: "pb_{p}({0}, pb_{p}({1}, {2})) + pb_{p}({1}, pb_{p}({2}, {0})) + pb_{p}({2}, pb_{p}({0}, {1}))",
            rhs: "0",
            arity: 3,
            operands: PAPER_OPERANDS,
            over_pairs: true,
        },
    });

    out
}
