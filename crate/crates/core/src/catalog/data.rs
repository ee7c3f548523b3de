use super::{Direction, Expected, GapKind};

pub(super) struct RawInequality {
    pub id: &'static str,
    pub text: &'static str,
    pub label: &'static str,
    pub quote: &'static str,
    pub expected: Expected,
    pub truncation: Option<(&'static str, &'static str)>,
    pub section: u8,
    pub note: Option<&'static str>,
}

const fn ineq(id: &'static str, text: &'static str, label: &'static str, quote: &'static str, section: u8) -> RawInequality {
    RawInequality { id, text, label, quote, expected: Expected::Provable, truncation: None, section, note: None }
}

const fn truncated(mut r: RawInequality, lo: &'static str, hi: &'static str) -> RawInequality {
    r.expected = Expected::ProvableOnTruncation;
    r.truncation = Some((lo, hi));
    r
}

const fn on_truncation(mut r: RawInequality) -> RawInequality {
    r.expected = Expected::ProvableOnTruncation;
    r
}

const fn expect(mut r: RawInequality, e: Expected) -> RawInequality {
    r.expected = e;
    r
}

const fn note(mut r: RawInequality, n: &'static str) -> RawInequality {
    r.note = Some(n);
    r
}

const CUSA: &str = r"(\cos x)^{1/3}<\frac{\sin x}{x}<\frac{\cos x+2}{3}";
const LAZ: &str = r"(\cosh x)^{1/3}<\frac{\sinh x}{x}<\frac{\cosh x+2}{3}";
const THM2: &str = r"3\cos x \le \frac{x}{\sin x}+2\frac{x}{\tan x} \le 2+\cos x";
const EQ0515: &str = r"\frac{\sinh x}{x}<\frac{\cosh x+2}{3}<(\cosh x)^{1/3}\frac{\cosh (2x/3)+1}{2}";
const T2201A: &str = r"\frac{\cos x+2}{3^{\alpha_1}}<\frac{\sin x}{x}<\frac{\cos x+2}{3^{\beta_1}}";
const T2201B: &str = r"\frac{\cos x+2^{\alpha_2}}{3}<\frac{\sin x}{x}<\frac{\cos x+2^{\beta_2}}{3}";
const KOBER: &str = r"3\exp \left( -\frac{x^2}{6} \right) -2<\cos x<\frac{\pi\exp(-(\pi-2)x^2/(2\pi))-2}{\pi-2}";
const TAN_TRUNC: (&str, &str) = ("-(pi/2 - 2^-8)", "pi/2 - 2^-8");

pub(super) const INEQUALITIES: &[RawInequality] = &[
    note(
        truncated(
            ineq("adamovic_lower", "cos(x)^(1/3) <= sinc(x) on [-pi/2, pi/2] sharp at {0}", "laztri", CUSA, 1),
            "-(pi/2 - 2^-20)",
            "pi/2 - 2^-20",
        ),
        "cos(x)^(1/3) is undefined just beyond pi/2, so the closed endpoint enclosure is trimmed",
    ),
    ineq("cusa_upper", "sinc(x) <= (cos(x) + 2)/3 on [-pi/2, pi/2] sharp at {0}", "laztri", CUSA, 1),
    on_truncation(ineq("lazarevic_lower", "cosh(x)^(1/3) <= sinhc(x) on [-20, 20] sharp at {0}", "lazhyp", LAZ, 1)),
    on_truncation(ineq("hyp_cusa_upper", "sinhc(x) <= (cosh(x) + 2)/3 on [-20, 20] sharp at {0}", "lazhyp", LAZ, 1)),
    truncated(
        ineq(
            "wilker",
            "sinc(x)^2 + sinc(x)/cos(x) >= 2 on [-pi/2, pi/2] sharp at {0}",
            "wilka",
            r"\left(\frac{\sin x}{x}\right)^2+\frac{\tan x}{x}>2",
            1,
        ),
        TAN_TRUNC.0,
        TAN_TRUNC.1,
    ),
    truncated(
        ineq(
            "huygens",
            "2*sinc(x) + sinc(x)/cos(x) >= 3 on [-pi/2, pi/2] sharp at {0}",
            "huyineq",
            r"2\frac{\sin x}{x}+\frac{\tan x}{x}>3",
            1,
        ),
        TAN_TRUNC.0,
        TAN_TRUNC.1,
    ),
    ineq(
        "wu_srivastava",
        "inv_sinc2(x) + xcot(x) >= 2 on [-pi/2, pi/2] sharp at {0}",
        "wilk",
        r"\left(\frac{x}{\sin x}\right)^2+\frac{x}{\tan x}>2",
        1,
    ),
    ineq(
        "thm1_lower",
        "(cos(x) + alpha - 1)/alpha <= sinc(x) on [-pi/2, pi/2] sharp at {-pi/2, 0, pi/2}",
        "thm1ineq",
        r"\frac{\cos x+\alpha-1}{\alpha} \leq \frac{\sin x}{x}",
        1,
    ),
    ineq("thm1_upper", "sinc(x) <= (cos(x) + 2)/3 on [-pi/2, pi/2] sharp at {0}", "thm1", r"\beta=3", 1),
    note(
        on_truncation(ineq(
            "thm1_upper_all_real",
            "sinc(x) <= (cos(x) + 2)/3 on [-4*pi, 4*pi] sharp at {0}",
            "thm1ineq",
            r"\frac{\sin x}{x} \leq \frac{\cos x+\beta-1}{\beta}",
            1,
        )),
        "claimed for every real x; certified on [-4pi, 4pi] only",
    ),
    ineq(
        "thm0",
        "inv_sinc2(x) + (pi^2/4 - 1)*xcot(x) <= pi^2/4 on [-pi/2, pi/2] sharp at {-pi/2, 0, pi/2}",
        "thm0ineq",
        r"\left(\frac{x}{\sin x}\right)^2+\left(\frac{\pi^2}{4}-1\right)\frac{x}{\tan x} \leq \frac{\pi^2}{4}",
        1,
    ),
    ineq(
        "newineq1",
        "(alpha - 1)/sinc(x) + xcot(x) <= alpha on [-pi/2, pi/2] sharp at {-pi/2, 0, pi/2}",
        "newineq1",
        r"(\alpha-1)\frac{x}{\sin x}+\frac{x}{\tan x} \leq \alpha",
        1,
    ),
    ineq(
        "newineq2",
        "(1/sinc(x))^alpha + xcot(x) <= k on [-pi/2, pi/2] sharp at {-pi/2, pi/2}",
        "newineq2",
        r"\left(\frac{x}{\sin x}\right)^\alpha+\frac{x}{\tan x} < \left(\frac{\pi}{2}\right)^\alpha",
        1,
    ),
    note(
        ineq(
            "newineq1_converse",
            "(alpha - 1)/sinc(x) + xcot(x) >= 2.7219 on [-pi/2, pi/2]",
            "indep",
            r"(\alpha-1)\frac{x}{\sin x}  + \frac{x}{\tan x}\geq f(x_1)\approx 2.7219",
            3,
        ),
        "the minimum f(x1) has no closed form; the printed decimal 2.7219 is used as the bound",
    ),
    note(
        ineq("thm2_lower", "3*cos(x) <= 1/sinc(x) + 2*xcot(x) on [-pi/2, pi/2] sharp at {0}", "thm2ineq", THM2, 1),
        "no proof of this side is displayed; certified numerically",
    ),
    ineq("thm2_upper", "1/sinc(x) + 2*xcot(x) <= 2 + cos(x) on [-pi/2, pi/2] sharp at {0}", "thm2ineq", THM2, 1),
    on_truncation(ineq(
        "thm4_chain_left",
        "inv_sinhc2(x) + xcoth(x) <= sinhc(x)^2 + sinhc(x)/cosh(x) on [0, 20] sharp at {0}",
        "thm4",
        r"\left(\frac{x}{\sinh x}\right)^2+\frac{x}{\tanh x}<\left(\frac{\sinh x}{x}\right)^2+",
        1,
    )),
    note(
        expect(
            ineq(
                "thm4_chain_right",
                "sinhc(x)^2 + sinhc(x)/cosh(x) <= (1 + cosh(2*x/3))/2*(inv_sinhc2(x) + xcoth(x)) on [0, 20] sharp at {0}",
                "thm4",
                r"<\frac{1+\cosh (2x/3)}{2}\left(\left(\frac{x}{\sinh x}\right)^2+\frac{x}{\tanh x}\right)",
                1,
            ),
            Expected::Refuted,
        ),
        "false as stated: the difference changes sign near x = 1.8",
    ),
    on_truncation(ineq(
        "yang",
        "exp(-x^2/6) <= (2 + cos(x))/3 on [0, 20] sharp at {0}",
        "yanginequ",
        r"\exp(-x^2/6)<\frac{2+\cos x}{3}",
        1,
    )),
    ineq(
        "thm2702_lower",
        "exp(alpha_exp - (pi - 2)*x^2/(2*pi)) <= ((pi - 2)*cos(x) + 2)/pi on [0, pi/2] sharp at {pi/2}",
        "2702",
        r"\exp \left( \alpha-\frac{(\pi-2)x^2}{2\pi} \right) <\frac{(\pi-2)\cos(x)+2}{\pi}",
        1,
    ),
    ineq(
        "thm2702_upper",
        "((pi - 2)*cos(x) + 2)/pi <= exp(-(pi - 2)*x^2/(2*pi)) on [0, pi/2] sharp at {0}",
        "2702",
        r"<\exp \left( \beta-\frac{(\pi-2)x^2}{2\pi} \right)",
        1,
    ),
    on_truncation(ineq(
        "lem2b_tanh",
        "tanh(x)/x <= 2/(sqrt(9 + 4*x^2) - 1) on [-20, 20] sharp at {0}",
        "lem2bineq1",
        r"\frac{\tanh x}{x} \le \frac{2}{\sqrt{9+4x^2}-1}",
        2,
    )),
    on_truncation(ineq("lem2b_hyp_left", "sinhc(x) <= (cosh(x) + 2)/3 on [0, 20] sharp at {0}", "ineq0515", EQ0515, 2)),
    on_truncation(ineq(
        "lem2b_hyp_right",
        "(cosh(x) + 2)/3 <= cosh(x)^(1/3)*(cosh(2*x/3) + 1)/2 on [0, 20] sharp at {0}",
        "ineq0515",
        EQ0515,
        2,
    )),
    ineq(
        "sinxnew_left",
        "4/pi^2*(1/sinc(x) + (pi^2/4 - 1)*cos(x)) <= sinc(x) on [-pi/2, pi/2] sharp at {-pi/2, 0, pi/2}",
        "sinxnew",
        r"\frac{4}{\pi^2}\left(\frac{x}{\sin x}+\left(\frac{\pi^2}{4}-1\right)\cos x\right)<\frac{\sin x}{x}",
        3,
    ),
    ineq(
        "sinxnew_right",
        "sinc(x) <= (1/sinc(x) + cos(x))/2 on [-pi/2, pi/2] sharp at {0}",
        "sinxnew",
        r"<\frac{1}{2}\left(\frac{x}{\sin x}+\cos x\right)",
        3,
    ),
    ineq(
        "jozs_lower",
        "pi/2 + cos(x) <= 1/sinc(x) + 2*xcot(x) on [0, pi/2] sharp at {pi/2}",
        "joz2811a",
        r"\frac{\pi}{2}   + \cos x<  \frac{x}{\sin x} +2\frac{x}{\tan x}",
        3,
    ),
    note(
        expect(
            ineq(
                "hyp_wu_srivastava",
                "inv_sinhc2(x) + xcoth(x) >= 2 on [-20, 20] sharp at {0}",
                "wilk",
                r"\left(\frac{x}{\sin x}\right)^2+\frac{x}{\tan x}>2",
                3,
            ),
            Expected::SuspectedTypo,
        ),
        "the displayed conclusion reads > 0 and the auxiliary identity is inconsistent; the intended \
         hyperbolic analogue with bound 2 is stored here and the literal form as hyp_wu_srivastava_literal",
    ),
    on_truncation(ineq(
        "hyp_wu_srivastava_literal",
        "inv_sinhc2(x) + xcoth(x) > 0 on [-20, 20]",
        "lem2bineq1",
        r"\left(\frac{ x}{\sinh x}\right)^2+\frac{ x}{\tanh x}>0",
        3,
    )),
    ineq(
        "thm2201_1_lower",
        "(cos(x) + 2)/3^alpha1 <= sinc(x) on [-pi/2, pi/2] sharp at {-pi/2, pi/2}",
        "thm2201",
        T2201A,
        3,
    ),
    ineq("thm2201_1_upper", "sinc(x) <= (cos(x) + 2)/3 on [-pi/2, pi/2] sharp at {0}", "thm2201", T2201A, 3),
    ineq(
        "thm2201_2_lower",
        "(cos(x) + 2^alpha2)/3 <= sinc(x) on [-pi/2, pi/2] sharp at {-pi/2, pi/2}",
        "thm2201",
        T2201B,
        3,
    ),
    ineq("thm2201_2_upper", "sinc(x) <= (cos(x) + 2)/3 on [-pi/2, pi/2] sharp at {0}", "thm2201", T2201B, 3),
    ineq("kober_lower", "3*exp(-x^2/6) - 2 <= cos(x) on [0, pi/2] sharp at {0}", "2702", KOBER, 3),
    ineq(
        "kober_upper",
        "cos(x) <= (pi*exp(-(pi - 2)*x^2/(2*pi)) - 2)/(pi - 2) on [0, pi/2] sharp at {0}",
        "2702",
        KOBER,
        3,
    ),
    ineq(
        "proof_aux_cos43",
        "cos(x/2)^(4/3) <= sinc(x) on [-pi/2, pi/2] sharp at {0}",
        "thm2",
        r"(\cos(x/2))^{4/3}<\frac{\sin x}{x}<\frac{2+\cos x}{3}",
        3,
    ),
];

pub(super) struct RawMonotone {
    pub id: &'static str,
    pub function: &'static str,
    pub domain: (&'static str, &'static str),
    pub direction: Direction,
    pub limits: (&'static str, &'static str),
    pub label: &'static str,
    pub quote: &'static str,
    pub note: Option<&'static str>,
}

pub(super) const MONOTONE: &[RawMonotone] = &[
    RawMonotone {
        id: "f1",
        function: "(inv_sinc2(x) - xcot(x))/(1 - xcot(x))",
        domain: ("0", "pi/2"),
        direction: Direction::Increasing,
        limits: ("2", "pi^2/4"),
        label: "lema",
        quote: r"f_1(x)=\frac{(x/\sin x)^2-x\cot x}{1-x\cot x}",
        note: Some("the stated range omits the left limit; the limits 2 and pi^2/4 are both recorded"),
    },
    RawMonotone {
        id: "f6",
        function: "(cos(x) - 1)/(sinc(x) - 1)",
        domain: ("0", "pi/2"),
        direction: Direction::Decreasing,
        limits: ("3", "alpha"),
        label: "thm1",
        quote: r"f_6(x)=\frac{\cos x-1}{(\sin x)/x-1}",
        note: None,
    },
    RawMonotone {
        id: "f_alpha",
        function: "(alpha/(alpha + x - 1))^alpha + alpha*x/(alpha + x - 1)",
        domain: ("0", "1"),
        direction: Direction::Decreasing,
        limits: ("k", "2"),
        label: "lem1202",
        quote: r"f_\alpha(b)=\left(\frac{\alpha}{\alpha+b-1}\right)^\alpha+\frac{\alpha b}{\alpha+b-1}",
        note: Some("the variable b is written as x"),
    },
    RawMonotone {
        id: "f10",
        function: "(2 + cos(x))/sinc(x)",
        domain: ("0", "pi/2"),
        direction: Direction::Increasing,
        limits: ("3", "pi"),
        label: "thm2201",
        quote: r"f_{10}(x)=\frac{x(2+\cos x)}{\sin x}",
        note: None,
    },
    RawMonotone {
        id: "f13",
        function: "3*sinc(x) - cos(x)",
        domain: ("0", "pi/2"),
        direction: Direction::Decreasing,
        limits: ("2", "6/pi"),
        label: "thm2201",
        quote: r"f_{13}=3 (\sin x)/x -\cos x",
        note: None,
    },
    RawMonotone {
        id: "f_thm2702",
        function: "log(((pi - 2)*cos(x) + 2)/pi) + (pi - 2)*x^2/(2*pi)",
        domain: ("0", "pi/2"),
        direction: Direction::Decreasing,
        limits: ("0", "alpha_exp"),
        label: "2702",
        quote: r"f(x)=\log\left(\frac{(\pi-2)\cos x+2}{\pi}\right)+\frac{(\pi-2)x^2}{2\pi}",
        note: None,
    },
    RawMonotone {
        id: "f_jozs",
        function: "1/sinc(x) + 2*xcot(x) - cos(x)",
        domain: ("0", "pi/2"),
        direction: Direction::Decreasing,
        limits: ("2", "pi/2"),
        label: "jozs",
        quote: r"f'(x)\cdot (\sin x)^2 =  \sin x-x\cos x +2\sin x \cos x -2x +(\sin x)^3  =h(x)",
        note: None,
    },
];

pub(super) struct RawRoot {
    pub id: &'static str,
    pub function: &'static str,
    pub bracket: (f64, f64),
    pub reference: f64,
    pub tolerance: f64,
    pub label: &'static str,
    pub quote: &'static str,
}

pub(super) const ROOTS: &[RawRoot] = &[
    RawRoot {
        id: "x0",
        function: "(alpha - 1)/2 - sinc(x)",
        bracket: (0.5, 1.2),
        reference: 0.8795,
        tolerance: 5e-4,
        label: "newthm",
        quote: r"x_0\approx 0.8795",
    },
    RawRoot {
        id: "x1",
        function: "(alpha - 1)*(sin(x) - x*cos(x)) + sin(x)*cos(x) - x",
        bracket: (1.0, 1.4),
        reference: 1.1559,
        tolerance: 5e-4,
        label: "newthm",
        quote: r"x_1\approx 1.1559",
    },
];

pub(super) enum RawPoint {
    Root(&'static str),
    Expr(&'static str),
}

pub(super) struct RawValue {
    pub id: &'static str,
    pub function: &'static str,
    pub at: RawPoint,
    pub expected: &'static str,
    pub tolerance: f64,
    pub label: &'static str,
    pub quote: &'static str,
}

pub(super) const VALUES: &[RawValue] = &[
    RawValue {
        id: "f_x1",
        function: "(alpha - 1)/sinc(x) + xcot(x)",
        at: RawPoint::Root("x1"),
        expected: "2.7219",
        tolerance: 5e-4,
        label: "indep",
        quote: r"f(x_1)\approx 2.7219",
    },
    RawValue {
        id: "thm0_at_half_pi",
        function: "inv_sinc2(x) + (pi^2/4 - 1)*xcot(x)",
        at: RawPoint::Expr("pi/2"),
        expected: "pi^2/4",
        tolerance: 1e-12,
        label: "thm0ineq",
        quote: r"\left(\frac{x}{\sin x}\right)^2+\left(\frac{\pi^2}{4}-1\right)\frac{x}{\tan x} \leq \frac{\pi^2}{4}",
    },
    RawValue {
        id: "newineq2_at_half_pi",
        function: "(1/sinc(x))^alpha + xcot(x)",
        at: RawPoint::Expr("pi/2"),
        expected: "k",
        tolerance: 1e-12,
        label: "newineq2",
        quote: r"\left(\frac{x}{\sin x}\right)^\alpha+\frac{x}{\tan x} < \left(\frac{\pi}{2}\right)^\alpha",
    },
    RawValue {
        id: "thm1_lower_at_half_pi",
        function: "sinc(x) - (cos(x) + alpha - 1)/alpha",
        at: RawPoint::Expr("pi/2"),
        expected: "0",
        tolerance: 1e-12,
        label: "thm1ineq",
        quote: r"\frac{\cos x+\alpha-1}{\alpha} \leq \frac{\sin x}{x}",
    },
    RawValue {
        id: "cusa_at_zero",
        function: "(cos(x) + 2)/3 - sinc(x)",
        at: RawPoint::Expr("0"),
        expected: "0",
        tolerance: 1e-12,
        label: "laztri",
        quote: CUSA,
    },
];

pub(super) struct RawGap {
    pub id: &'static str,
    pub function: &'static str,
    pub bound: &'static str,
    pub domain: (&'static str, &'static str),
    pub kind: GapKind,
    pub label: &'static str,
    pub quote: &'static str,
}

pub(super) const GAPS: &[RawGap] = &[
    RawGap {
        id: "gap_thm1_lower",
        function: "sinc(x)",
        bound: "(cos(x) + alpha - 1)/alpha",
        domain: ("0", "pi/2"),
        kind: GapKind::Below(0.01),
        label: "thm1ineq",
        quote: r"\frac{\cos x+\alpha-1}{\alpha} \leq \frac{\sin x}{x}",
    },
    RawGap {
        id: "gap_thm1_upper",
        function: "sinc(x)",
        bound: "(cos(x) + 2)/3",
        domain: ("0", "pi/2"),
        kind: GapKind::Below(0.031),
        label: "thm1ineq",
        quote: r"\frac{\sin x}{x} \leq \frac{\cos x+\beta-1}{\beta}",
    },
    RawGap {
        id: "gap_thm0",
        function: "inv_sinc2(x) + (pi^2/4 - 1)*xcot(x)",
        bound: "pi^2/4",
        domain: ("0", "pi/2"),
        kind: GapKind::Below(0.13),
        label: "thm0ineq",
        quote: r"\left(\frac{x}{\sin x}\right)^2+\left(\frac{\pi^2}{4}-1\right)\frac{x}{\tan x} \leq \frac{\pi^2}{4}",
    },
    RawGap {
        id: "gap_newineq2",
        function: "(1/sinc(x))^alpha + xcot(x)",
        bound: "k",
        domain: ("0", "pi/2"),
        kind: GapKind::MaxWithin(1.45, 1.9),
        label: "newineq2",
        quote: r"\left(\frac{x}{\sin x}\right)^\alpha+\frac{x}{\tan x} < \left(\frac{\pi}{2}\right)^\alpha",
    },
    RawGap {
        id: "gap_lem2b_tanh",
        function: "tanh(x)/x",
        bound: "2/(sqrt(9 + 4*x^2) - 1)",
        domain: ("0", "20"),
        kind: GapKind::Below(0.02),
        label: "lem2bineq1",
        quote: r"\frac{\tanh x}{x} \le \frac{2}{\sqrt{9+4x^2}-1}",
    },
    RawGap {
        id: "gap_thm2_lower",
        function: "1/sinc(x) + 2*xcot(x)",
        bound: "3*cos(x)",
        domain: ("0", "pi/2"),
        kind: GapKind::Below(1.6),
        label: "thm2ineq",
        quote: THM2,
    },
    RawGap {
        id: "gap_thm2_upper",
        function: "1/sinc(x) + 2*xcot(x)",
        bound: "2 + cos(x)",
        domain: ("0", "pi/2"),
        kind: GapKind::Below(0.55),
        label: "thm2ineq",
        quote: THM2,
    },
    RawGap {
        id: "gap_thm2_lower_sq",
        function: "1/sinc(x) + 2*xcot(x)",
        bound: "3*cos(x)",
        domain: ("0", "pi/2"),
        kind: GapKind::BelowSquare,
        label: "thm2ineq",
        quote: THM2,
    },
    RawGap {
        id: "gap_thm2_upper_sq",
        function: "1/sinc(x) + 2*xcot(x)",
        bound: "2 + cos(x)",
        domain: ("0", "pi/2"),
        kind: GapKind::BelowSquare,
        label: "thm2ineq",
        quote: THM2,
    },
];
