//! Shared generators for integration tests.

use heptacore::expr::{Atom, BinOp, Expr, Unary};
use heptacore::theta::{Sign, ThetaArgs};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Well-formed expression trees of bounded depth.
pub fn arb_expr() -> impl Strategy<Value = Expr> {
    let atom = prop_oneof![
        Just(Atom::Euler),
        Just(Atom::Phi),
        Just(Atom::Psi),
        Just(Atom::ChiNeg),
        Just(Atom::Sigma),
        Just(Atom::Omega)
    ];
    let sign = prop_oneof![Just(Sign::Plus), Just(Sign::Minus)];
    let leaf = prop_oneof![
        (0u32..100).prop_map(|v| Expr::Int(BigInt::from(v))),
        (0usize..20).prop_map(Expr::QPow),
        (atom, 1usize..30).prop_map(|(a, k)| Expr::Named(a, k)),
        (sign.clone(), 0usize..15, sign, 1usize..15)
            .prop_map(|(sa, r, sb, s)| Expr::Theta(ThetaArgs::new(sa, r, sb, s).unwrap())),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        let unary = prop_oneof![
            Just(Unary::Even),
            Just(Unary::Odd),
            Just(Unary::T2),
            Just(Unary::AltQ)
        ];
        let op = prop_oneof![
            Just(BinOp::Add),
            Just(BinOp::Sub),
            Just(BinOp::Mul),
            Just(BinOp::Div)
        ];
        prop_oneof![
            (unary, inner.clone()).prop_map(|(u, e)| Expr::apply(u, e)),
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), 0u32..6).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
            (op, inner.clone(), inner).prop_map(|(op, a, b)| Expr::binary(op, a, b)),
        ]
    })
}
