//! The characteristic schemas on finite chains, with the refuting
//! valuation for `Bm` one value up.

use epsilon_elim::semantics::{
    counterexample_bm, eval_godel, schema, schema_relations_check, valid_in_lcm, Budget, Prop, SchemaKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 2..=5 {
        let atoms: Vec<Prop> = (0..=m).map(Prop::Atom).collect();
        let bm = schema(SchemaKind::Bm(m), &atoms)?;
        let here = valid_in_lcm(&bm, m as u32, Budget::default())?.is_valid();
        let (chain, v) = counterexample_bm(m)?;
        let value = eval_godel(&bm, &v, chain)?;
        println!(
            "B{m}: valid on {m} values: {here}; on {} values {:?} gives {value} < {}",
            chain.size(),
            v.0,
            chain.top()
        );
    }
    for row in schema_relations_check(2..=5)? {
        println!("B{} entails Lin: {}, entails R{}: {}", row.m, row.entails_lin, row.m - 1, row.entails_r);
    }
    Ok(())
}
