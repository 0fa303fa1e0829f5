//! Check the classical summation and product identities: terminating sums
//! exactly (including under `q -> 1/q`), infinite products coefficientwise.
//!
//! Run with: `cargo run --example identities`

use std::collections::BTreeMap;

use qcongruence::identities::{
    verify_product_identity, verify_q_clausen, verify_q_gauss_specialization,
    verify_terminating, verify_terminating_reversed, SignedMonomial, PRODUCT_IDS,
};
use qcongruence::QcError;

fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn main() -> Result<(), QcError> {
    let terminating: &[(&str, &[(&str, i64)])] = &[
        ("q_chu_vandermonde", &[("alpha", 2), ("gamma", 5), ("n", 6)]),
        ("q_kummer", &[("alpha", 3), ("m", 7)]),
        ("andrews_q_watson", &[("alpha", 2), ("beta", 3), ("m", 8)]),
        ("andrews_q_watson", &[("alpha", 2), ("beta", 3), ("m", 7)]), // odd: vanishes
        (
            "jackson_q_dixon_even",
            &[("sb", 1), ("sc", -1), ("beta", 3), ("gamma", 2), ("n", 4), ("step", 1)],
        ),
        (
            "jackson_q_dixon_odd",
            &[("sb", -1), ("sc", 1), ("beta", 2), ("gamma", 3), ("n", 4), ("step", 1)],
        ),
        ("spec_8k1", &[("n", 17)]),
        ("spec_8k3", &[("n", 11)]),
        ("spec_8k5", &[("n", 13)]),
        ("spec_8k7", &[("n", 7)]),
    ];
    for (id, pairs) in terminating {
        let p = params(pairs);
        let direct = verify_terminating(id, &p)?;
        let reversed = verify_terminating_reversed(id, &p)?;
        println!("{id:<22} direct={direct} reversed={reversed}");
        assert!(direct && reversed);
    }

    for id in PRODUCT_IDS {
        let ok = verify_product_identity(id, 150)?;
        println!("{id:<22} series-to-order-150={ok}");
        assert!(ok);
    }

    // squaring identity at a sample specialization, plus the q-Gauss check
    let ok = verify_q_clausen(2, SignedMonomial { sign: 1, exp: 5 }, 80)?;
    println!("q_clausen(alpha=2, z=q^5)  {ok}");
    let ok = verify_q_gauss_specialization(80)?;
    println!("q_gauss specialization     {ok}");
    Ok(())
}
