#include "asymcone/report.hpp"

#include <sstream>

#include "asymcone/errors.hpp"

namespace asymcone::report {

namespace {

Json basis_json(const Basis& b) {
  Json rows = Json::array();
  for (int i = 0; i < b.rank; ++i) {
    Json row = Json::array();
    for (const Int& x : b.row(i)) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json poly_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (int k = p.degree(); k >= 0; --k) coeffs.push_back(p.coeffs[k].str());
  Json out;
  out["degree"] = p.degree();
  out["coeffs_desc"] = std::move(coeffs);
  out["text"] = p.str();
  return out;
}

Json forms_json(const Arrangement& a) {
  Json forms = Json::array();
  for (const auto& f : a.forms) {
    Json coeffs = Json::array();
    for (const Int& x : f.coeffs) coeffs.push_back(x.str());
    Json jf;
    jf["coeffs"] = std::move(coeffs);
    jf["mult"] = f.mult.str();
    forms.push_back(std::move(jf));
  }
  return forms;
}

std::string matrix_text(const Json& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ",";
      out += rows[i][j].get<std::string>();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

Json lattice_json(const IntersectionPoset& p) {
  Json doc;
  doc["dim"] = p.arrangement.dim;
  doc["degree"] = p.arrangement.total_degree().str();
  doc["forms"] = forms_json(p.arrangement);

  Json flats = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json jf;
    jf["index"] = i;
    jf["codim"] = p.flats[i].codim();
    jf["dim"] = p.arrangement.dim - p.flats[i].codim();
    jf["normal_basis"] = basis_json(p.flats[i].normals);
    jf["mobius"] = p.mobius[i].str();
    flats.push_back(std::move(jf));
  }
  doc["flats"] = std::move(flats);

  // Strict containments i < j, i.e. flats[i] is a proper subspace of
  // flats[j].
  Json pairs = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(static_cast<int>(i), static_cast<int>(j)))
        pairs.push_back(Json::array({i, j}));
  doc["containments"] = std::move(pairs);

  doc["char_poly"] = poly_json(char_poly(p));
  return doc;
}

Json charpoly_json(const IntersectionPoset& p) {
  Json doc;
  doc["dim"] = p.arrangement.dim;
  doc["char_poly"] = poly_json(char_poly(p));
  return doc;
}

Json euler_json(const IntersectionPoset& p) {
  Json doc;
  doc["dim"] = p.arrangement.dim;
  doc["degree"] = p.arrangement.total_degree().str();
  doc["complement_euler"] = complement_euler(p).str();
  doc["decone_euler"] = decone_euler(p).str();
  doc["milnor_euler"] = milnor_euler(p).str();
  return doc;
}

Json cc_json(const IntersectionPoset& p) {
  CharCycle cc = multiplicities(p);
  Int chi = milnor_euler(p);

  Json doc;
  doc["dim"] = p.arrangement.dim;
  doc["degree"] = p.arrangement.total_degree().str();
  doc["milnor_euler"] = chi.str();

  Int signed_sum = 0;
  Json flats = Json::array();
  for (const auto& [flat, m] : cc.entries) {
    Json jf;
    jf["normal_basis"] = basis_json(flat.normals);
    jf["codim"] = flat.codim();
    jf["c"] = flat.strat_codim();
    jf["m"] = m.str();
    flats.push_back(std::move(jf));
    if (flat.strat_codim() % 2 == 0)
      signed_sum += m;
    else
      signed_sum -= m;
  }
  doc["flats"] = std::move(flats);
  doc["rank_L"] = cc.entries.back().second.str();

  Basis dual = dual_support(p.arrangement);
  doc["dual_support_basis"] = basis_json(dual);
  doc["reconstruction_residual"] = Int(signed_sum - chi).str();
  return doc;
}

Json rank_json(const IntersectionPoset& p) {
  CharCycle cc = multiplicities(p);
  Json doc;
  doc["dim"] = p.arrangement.dim;
  doc["degree"] = p.arrangement.total_degree().str();
  doc["rank_L"] = cc.entries.back().second.str();
  return doc;
}

std::string lattice_text(const Json& doc) {
  std::ostringstream out;
  out << "dim " << doc["dim"] << "  degree " << doc["degree"].get<std::string>()
      << "  flats " << doc["flats"].size() << "\n";
  for (const auto& f : doc["flats"]) {
    out << "  [" << f["index"] << "] dim " << f["dim"] << "  codim "
        << f["codim"] << "  mobius " << f["mobius"].get<std::string>()
        << "  basis " << matrix_text(f["normal_basis"]) << "\n";
  }
  out << "containments:";
  for (const auto& pr : doc["containments"])
    out << " " << pr[0] << "<" << pr[1];
  out << "\nchar_poly: " << doc["char_poly"]["text"].get<std::string>() << "\n";
  return out.str();
}

std::string charpoly_text(const Json& doc) {
  return doc["char_poly"]["text"].get<std::string>() + "\n";
}

std::string euler_text(const Json& doc) {
  std::ostringstream out;
  out << "complement_euler " << doc["complement_euler"].get<std::string>()
      << "\ndecone_euler " << doc["decone_euler"].get<std::string>()
      << "\nmilnor_euler " << doc["milnor_euler"].get<std::string>() << "\n";
  return out.str();
}

std::string cc_text(const Json& doc) {
  std::ostringstream out;
  out << "dim " << doc["dim"] << "  degree "
      << doc["degree"].get<std::string>() << "  milnor_euler "
      << doc["milnor_euler"].get<std::string>() << "\n";
  for (const auto& f : doc["flats"]) {
    out << "  codim " << f["codim"] << "  c " << f["c"] << "  m "
        << f["m"].get<std::string>() << "  basis "
        << matrix_text(f["normal_basis"]) << "\n";
  }
  out << "rank_L " << doc["rank_L"].get<std::string>() << "\n";
  out << "dual_support_basis " << matrix_text(doc["dual_support_basis"])
      << "\n";
  out << "reconstruction_residual "
      << doc["reconstruction_residual"].get<std::string>() << "\n";
  return out.str();
}

std::string rank_text(const Json& doc) {
  return doc["rank_L"].get<std::string>() + "\n";
}

VerifyOutcome run_verify(const Arrangement& a, const VerifyOptions& opt) {
  VerifyOutcome out;
  bool ok = true;
  Json warnings = Json::array();
  Json observations = Json::array();

  IntersectionPoset poset = build_poset(a, opt.flat_cap);
  Polynomial cp = char_poly(poset);
  CharCycle cc = multiplicities(poset);

  Json doc;
  doc["dim"] = a.dim;
  doc["degree"] = a.total_degree().str();
  doc["char_poly"] = cp.str();

  // Finite-field counts vs the characteristic polynomial.
  Json primes = Json::array();
  for (std::int64_t p : opt.primes) {
    Json jp;
    jp["p"] = p;
    bool good = oracle::good_prime(a, p);
    jp["good"] = good;
    if (good) {
      Int predicted = cp.eval(p);
      jp["char_poly_at_p"] = predicted.str();
      try {
        Int counted = oracle::count_points_raw(a, p, opt.budget);
        jp["point_count"] = counted.str();
        bool match = counted == predicted;
        jp["match"] = match;
        ok = ok && match;
      } catch (const BudgetExceeded& e) {
        jp["point_count"] = nullptr;
        warnings.push_back(std::string("prime ") + std::to_string(p) + ": " +
                           e.what());
        out.had_warnings = true;
      }
    }
    primes.push_back(std::move(jp));
  }
  doc["primes"] = std::move(primes);

  // Independent multiplicity system.
  Json ref;
  try {
    CharCycle reference = oracle::reference_multiplicities(a);
    bool match = reference.entries.size() == cc.entries.size();
    Json mismatches = Json::array();
    if (match) {
      for (std::size_t i = 0; i < cc.entries.size(); ++i) {
        if (!(reference.entries[i].first == cc.entries[i].first) ||
            reference.entries[i].second != cc.entries[i].second) {
          match = false;
          Json bad;
          bad["flat"] = basis_json(cc.entries[i].first.normals);
          bad["m"] = cc.entries[i].second.str();
          bad["reference_m"] = reference.entries[i].second.str();
          mismatches.push_back(std::move(bad));
        }
      }
    }
    ref["ran"] = true;
    ref["match"] = match;
    if (!mismatches.empty()) ref["mismatches"] = std::move(mismatches);
    ok = ok && match;
  } catch (const InstanceTooLarge& e) {
    ref["ran"] = false;
    warnings.push_back(std::string("reference system skipped: ") + e.what());
    out.had_warnings = true;
  }
  doc["reference"] = std::move(ref);

  // Decone characteristic must not depend on the slice choice.
  {
    Int deconed = decone_euler(poset);
    Json slices;
    slices["decone_euler"] = deconed.str();
    bool match = true;
    for (std::size_t i = 0; i < a.forms.size(); ++i) {
      Int sliced = oracle::affine_decone_euler(a, i);
      if (sliced != deconed) {
        match = false;
        slices["first_mismatch"] =
            Json{{"form_index", i}, {"slice_value", sliced.str()}};
        break;
      }
    }
    slices["match"] = match;
    ok = ok && match;
    doc["decone_slices"] = std::move(slices);
  }

  // Alternating-sum residual at every localization (exactly zero when the
  // multiplicities are right). The fault offset exists so tests can prove
  // a mismatch is actually caught.
  {
    std::vector<Int> m(poset.size(), 0);
    for (std::size_t i = 1; i < poset.size(); ++i)
      m[i] = cc.entries[i - 1].second;
    Int max_residual = 0;
    for (std::size_t t = 1; t < poset.size(); ++t) {
      Int sum = 0;
      for (std::size_t s = 1; s < poset.size(); ++s) {
        if (!poset.supports[s].subset_of(poset.supports[t])) continue;
        int c = poset.flats[s].strat_codim() + opt.fault_c_offset;
        sum += (c % 2 + 2) % 2 == 0 ? m[s] : -m[s];
      }
      Int residual =
          sum - milnor_euler_localized(poset, static_cast<int>(t));
      if (boost::multiprecision::abs(residual) > max_residual)
        max_residual = boost::multiprecision::abs(residual);
    }
    doc["max_localization_residual"] = max_residual.str();
    ok = ok && max_residual.is_zero();
  }

  // Not promised anywhere, but worth surfacing when it happens.
  for (const auto& [flat, m] : cc.entries)
    if (m.is_zero()) {
      observations.push_back("m = 0 at a flat of codim " +
                             std::to_string(flat.codim()));
      break;
    }

  doc["warnings"] = std::move(warnings);
  if (!observations.empty()) doc["observations"] = std::move(observations);
  doc["ok"] = ok;
  out.doc = std::move(doc);
  out.ok = ok;
  return out;
}

std::string verify_text(const Json& doc) {
  std::ostringstream out;
  out << "dim " << doc["dim"] << "  degree "
      << doc["degree"].get<std::string>() << "\nchar_poly: "
      << doc["char_poly"].get<std::string>() << "\n";
  out << "prime  good  char_poly(p)  point_count  match\n";
  for (const auto& jp : doc["primes"]) {
    out << "  " << jp["p"] << "     " << (jp["good"].get<bool>() ? "yes" : "no ");
    if (jp["good"].get<bool>()) {
      out << "   " << jp["char_poly_at_p"].get<std::string>() << "          ";
      if (jp.contains("point_count") && !jp["point_count"].is_null())
        out << jp["point_count"].get<std::string>() << "       "
            << (jp["match"].get<bool>() ? "yes" : "NO");
      else
        out << "(skipped)";
    }
    out << "\n";
  }
  const auto& ref = doc["reference"];
  out << "reference multiplicities: ";
  if (!ref["ran"].get<bool>())
    out << "skipped\n";
  else if (ref["match"].get<bool>())
    out << "match\n";
  else {
    out << "MISMATCH\n";
    for (const auto& bad : ref["mismatches"])
      out << "  flat " << matrix_text(bad["flat"]) << ": m = "
          << bad["m"].get<std::string>() << " vs reference "
          << bad["reference_m"].get<std::string>() << "\n";
  }
  out << "decone slice check: "
      << (doc["decone_slices"]["match"].get<bool>() ? "match" : "MISMATCH")
      << "\n";
  out << "max localization residual: "
      << doc["max_localization_residual"].get<std::string>() << "\n";
  for (const auto& w : doc["warnings"])
    out << "warning: " << w.get<std::string>() << "\n";
  if (doc.contains("observations"))
    for (const auto& o : doc["observations"])
      out << "note: " << o.get<std::string>() << "\n";
  out << (doc["ok"].get<bool>() ? "all checks passed" : "CHECKS FAILED")
      << "\n";
  return out.str();
}

}  // namespace asymcone::report
