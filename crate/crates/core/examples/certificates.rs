//! Emit a certificate as JSON, read it back and check it again.

use tangleduct::backends::{graph_separations, GraphInput, DEFAULT_MAX_CLOSURE};
use tangleduct::duality::{strong_duality, verify_strong, StrongOptions};
use tangleduct::generate::demo_family;
use tangleduct::io::{certificate_to_json, parse_certificate, parse_system, sets_to_json, Flavour};

fn main() -> tangleduct::error::Result<()> {
    let g = GraphInput::path(4);
    let su = graph_separations(&g, 2, DEFAULT_MAX_CLOSURE)?;
    let pool: Vec<_> = su.system.members().iter().map(|&s| su.sides(s)).collect();
    let text = sets_to_json(&su.ground, &pool).to_string();
    let loaded = parse_system(&text, DEFAULT_MAX_CLOSURE)?;

    let f = demo_family(loaded.sets.as_ref().expect("set system"));
    let run = strong_duality(&loaded.system, &f, StrongOptions { auto_standardize: true })?;
    let transcript = verify_strong(&loaded.system, &run.family, &run.certificate)?;
    let json = certificate_to_json(&run.certificate, Flavour::Strong, &transcript, &run.family, &loaded);
    println!("{}", serde_json::to_string_pretty(&json).expect("json"));

    let back = parse_certificate(&json.to_string(), &loaded)?;
    let family = back.family.expect("embedded family");
    println!("read back, verified again: {}", verify_strong(&loaded.system, &family, &back.certificate)?.all_passed());
    Ok(())
}
