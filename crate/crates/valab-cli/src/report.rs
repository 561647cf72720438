//! The report emitted by every command: a fixture id, the tool version, and
//! an ordered list of entries. With exact arithmetic and sorted entries the
//! same invocation is byte-identical across runs and platforms.

use serde::Serialize;
use valab_core::report::{CheckReport, Status};

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub tool_version: String,
    pub fixture: String,
    pub command: String,
    pub entries: Vec<Entry>,
}

#[derive(Serialize, Debug, Clone)]
pub struct Entry {
    pub check_id: String,
    pub status: String,
    /// The mathematical statement or quantity this entry reports on.
    pub property: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub values: Vec<String>,
}

impl Report {
    pub fn new(fixture: &str, command: &str) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            fixture: fixture.to_string(),
            command: command.to_string(),
            entries: Vec::new(),
        }
    }

    pub fn push_check_report(&mut self, rep: &CheckReport) {
        for e in &rep.entries {
            self.entries.push(Entry {
                check_id: e.id.clone(),
                status: e.status.to_string(),
                property: describe(&e.id).to_string(),
                witness: e.witness.clone(),
                detail: e.detail.clone(),
                values: Vec::new(),
            });
        }
    }

    pub fn push_value(&mut self, id: &str, property: &str, values: Vec<String>) {
        self.entries.push(Entry {
            check_id: id.to_string(),
            status: "pass".to_string(),
            property: property.to_string(),
            witness: None,
            detail: None,
            values,
        });
    }

    pub fn push_status(&mut self, id: &str, status: Status, property: &str, detail: Option<String>) {
        self.entries.push(Entry {
            check_id: id.to_string(),
            status: status.to_string(),
            property: property.to_string(),
            witness: None,
            detail,
            values: Vec::new(),
        });
    }

    pub fn skip(&mut self, id: &str, property: &str, reason: &str) {
        self.push_status(id, Status::Skipped, property, Some(reason.to_string()));
    }

    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| e.status == "fail")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# {} {} (tool {})\n",
            self.command, self.fixture, self.tool_version
        ));
        for e in &self.entries {
            out.push_str(&format!("{:<44} {:<13}", e.check_id, e.status));
            if !e.values.is_empty() {
                out.push_str(&format!(" {}", e.values.join("; ")));
            }
            if let Some(w) = &e.witness {
                out.push_str(&format!("  at {w}"));
            }
            if let Some(d) = &e.detail {
                out.push_str(&format!("  [{d}]"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

/// The mathematical statement behind each check id, for report readers.
pub fn describe(id: &str) -> &'static str {
    match id {
        "alg.commutativity" => "x*y = y*x on all basis pairs",
        "alg.unitality" => "1*x = x on all basis vectors",
        "alg.associativity" => "(x*y)*z = x*(y*z) on all basis triples",
        "leib.identity" => "[a,[b,c]] = [[a,b],c] + [b,[a,c]] on all basis triples",
        "tc.derivation.zero_mode" => "partial-images act by zero in mode 0",
        "tc.derivation.one_mode" => "(partial a)(1) = -a(0) as operators",
        "tc.derivation.partial_commute" => "partial(u(0)a) = u(0)partial(a)",
        "tc.commutativity.mode0_mixed" => "u(0)a = -a(0)u across weights",
        "tc.commutativity.mode0_skew" => "u(0)v = -v(0)u + partial(u(1)v)",
        "tc.commutativity.mode1_symmetric" => "u(1)v = v(1)u",
        "tc.associativity.mode0" => "x(0)(y(0)z) = y(0)(x(0)z) + (x(0)y)(0)z",
        "tc.associativity.mode1" => "x(0)(y(1)z) = y(1)(x(0)z) + (x(0)y)(1)z",
        "va.action_unital" => "1.v = v",
        "va.pairing_symmetric" => "<u,v> = <v,u>",
        "va.anchor_partial_zero" => "pi(partial(a)) = 0",
        "va.bracket_leibniz" => "the bracket satisfies the left Leibniz identity",
        "va.anchor_bracket_hom" => "pi([u,v]) = [pi(u), pi(v)] as operators",
        "va.anchor_derivation" => "pi(u) is a derivation of the base algebra",
        "va.action_associator" => "a.(a'.v) - (a*a').v = pi(v)(a).partial(a') + pi(v)(a').partial(a)",
        "va.bracket_action" => "[u, a.v] = pi(u)(a).v + a.[u,v]",
        "va.bracket_skew_partial" => "[u,v] + [v,u] = partial(<u,v>)",
        "va.anchor_action" => "pi(a.v) = a pi(v)",
        "va.pairing_action" => "<a.u, v> = a*<u,v> - pi(u)(pi(v)(a))",
        "va.anchor_pairing_invariance" => "pi(v)<v1,v2> = <[v,v1],v2> + <v1,[v,v2]>",
        "va.partial_derivation" => "partial(a*a') = a.partial(a') + a'.partial(a)",
        "va.bracket_partial" => "[v, partial(a)] = partial(pi(v)(a))",
        "va.pairing_partial" => "<v, partial(a)> = pi(v)(a)",
        "compat.action_associator" => "a.(a'.u) - (a*a').u = (u(0)a).partial(a') + (u(0)a').partial(a)",
        "compat.bracket_action" => "u(0)(a.v) - a.(u(0)v) = (u(0)a).v",
        "compat.anchor_derivation" => "u(0)(a*a') = a*(u(0)a') + (u(0)a)*a'",
        "compat.anchor_action" => "a(0)(a'.v) = a'*(a(0)v)",
        "compat.pairing_action" => "(a.u)(1)v = a*(u(1)v) - u(0)(v(0)a)",
        "compat.partial_derivation" => "partial(a*a') = a.partial(a') + a'.partial(a)",
        "ctx.form_symmetric" => "B is symmetric",
        "ctx.form_nondegenerate" => "B is nondegenerate",
        "ctx.form_invariant" => "B(x*y, z) = B(x, y*z)",
        "ctx.unit_socle_pairing" => "B(1, t) = 1 after gauge fixing",
        "ctx.t_spans_socle" => "t spans the one-dimensional socle",
        "ctx.maximal_ideal_is_radical" => "the stored maximal ideal is the Jacobson radical",
        "ctx.base_local" => "the base algebra is local",
        "ctx.degree_pairing" => "B pairs only complementary degrees",
        "socle_action.scalar" => "each basis vector acts on the socle line by a scalar",
        "socle_action.preserves_line" => "the anchor action preserves the socle line",
        "perp.pairing_v1_symmetric" => "the weight-1 pairing <.|.> is symmetric",
        "perp.rad_contains_partial_image" => "partial(A) lies in rad((.,.))",
        "perp.rad_two_sided_ideal" => "rad((.,.)) is a two-sided Leibniz ideal",
        "perp.m_codim_le_1" => "M = {u : u(0)t = 0} has codimension at most 1",
        "perp.m_contains_partial_image" => "partial(A) lies in M",
        "perp.socle_transport_orthogonal" => "t(-2)a is orthogonal to all of B for a in the maximal ideal",
        "perp.m_equals_partial_t_perp" => "M is the orthogonal complement of partial(t) under <.|.>",
        "perp.rad_equals_skew_transport_kernel" => "u in rad((.,.)) iff u(-1)t is orthogonal to B",
        "perp.rad_equals_w" => "if L(1)B lies in the maximal ideal then rad((.,.)) = W",
        "perp.ann_t_left_ideal" => "Ann(t(-1)) is a left Leibniz ideal",
        "perp.eps_kills_l1_image" => "B(1, L(1)u) = 0 for every u",
        "virplus.commutator" => "[L(p), L(q)] = (p-q) L(p+q) on the loop module",
        "ssf.dim_at_least_two" => "the base algebra has dimension at least 2",
        "ssf.pairing_ef_unit" => "<e,f> = 1",
        "ssf.h1h_is_two_unit" => "<h,h> = 2",
        "ssf.levi_pairings_vanish" => "<e,e> = <f,f> = <e,h> = <f,h> = 0",
        "ssf.ker_partial_unit_line" => "ker(partial) is exactly the unit line",
        "ssf.module_basis_count" => "the module pieces and the unit span the base",
        "ssf.module_weights" => "each piece is the two-dimensional irreducible sl2-module",
        "ssf.rel_action" => "module vectors act on e, f, h through partial-images",
        "ssf.rel_pairing" => "pairings of partial-images with e, f, h match the anchor",
        "ssf.rel_products_vanish" => "all products of module vectors vanish",
        "ssf.rel_action_on_partials_vanish" => "module vectors kill all partial-images",
        "ssf.maximal_ideal_squares_to_zero" => "the maximal ideal squares to zero",
        _ => "",
    }
}
