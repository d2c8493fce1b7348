#include "sl3web/bijection.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "sl3web/mdiagram.hpp"

namespace sl3web {

web tableau_to_web(const tableau& t, const sign_string& s) {
    standardized st = standardize(t, s);  // rejects anything that is not a content-s filling
    if (s.empty()) return empty_web();
    m_diagram md = build_m_diagram(conjugate(st.tab));
    web raw = web_from_m_diagram(md);
    return contract_minus_pairs(raw, st.pm, s);
}

namespace {

constexpr size_t max_notes = 12;

enum class bucket { round_trip, distinctness, ellipticity, tau, rotation, join };

struct note_sink {
    std::vector<std::tuple<long long, bucket, std::string>> notes;
    void add(long long idx, bucket b, std::string text) {
        notes.emplace_back(idx, b, std::move(text));
    }
};

std::vector<std::string>& list_for(verification_report& rep, bucket b) {
    switch (b) {
        case bucket::round_trip: return rep.round_trip_failures;
        case bucket::distinctness: return rep.distinctness_collisions;
        case bucket::ellipticity: return rep.ellipticity_violations;
        case bucket::tau: return rep.tau_failures;
        case bucket::rotation: return rep.rotation_mismatches;
        case bucket::join: return rep.join_mismatches;
    }
    return rep.round_trip_failures;
}

void push_note(verification_report& rep, bucket b, const std::string& text) {
    auto& list = list_for(rep, b);
    if (list.size() < max_notes) list.push_back(text);
    else if (list.size() == max_notes) list.push_back("... more failures of this kind suppressed");
}

// Run body(case index, sink) over 0..cases-1 on a worker pool; merge recorded
// notes into the report in case order. Exceptions become notes in `crash_bucket`.
void run_cases(long long cases, int threads, verification_report& rep, bucket crash_bucket,
               const std::function<void(long long, note_sink&)>& body) {
    if (threads <= 0) threads = int(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    threads = int(std::min<long long>(threads, std::max<long long>(cases, 1)));

    std::vector<note_sink> sinks(threads);
    std::vector<std::thread> pool;
    for (int tid = 0; tid < threads; ++tid)
        pool.emplace_back([&, tid] {
            for (long long k = tid; k < cases; k += threads) {
                try {
                    body(k, sinks[tid]);
                } catch (const std::exception& e) {
                    sinks[tid].add(k, crash_bucket, std::string("exception: ") + e.what());
                }
            }
        });
    for (auto& th : pool) th.join();

    rep.filling_count += cases;
    std::vector<std::tuple<long long, bucket, std::string>> all;
    for (auto& s : sinks) all.insert(all.end(), s.notes.begin(), s.notes.end());
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    for (auto& [idx, b, text] : all) push_note(rep, b, "case " + std::to_string(idx) + ": " + text);
}

// Count distinct nonempty codes; empty slots mark earlier per-case failures.
void merge_codes(verification_report& rep, const std::vector<std::string>& codes,
                 const std::function<std::string(long long)>& describe) {
    std::map<std::string, long long> first_with_code;
    for (long long k = 0; k < static_cast<long long>(codes.size()); ++k) {
        if (codes[k].empty()) continue;
        auto [it, fresh] = first_with_code.emplace(codes[k], k);
        if (fresh) ++rep.web_count;
        else push_note(rep, bucket::distinctness, describe(it->second) + " and " + describe(k) +
                                                      " map to the same web");
    }
}

std::string validity_problems(const web& w) {
    auto bad = validate_web(w);
    return bad.empty() ? std::string() : issues_to_string(bad);
}

std::string ellipticity_problems(const web& w) {
    auto bad = ellipticity_violations(w);
    return bad.empty() ? std::string() : issues_to_string(bad);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

verification_report verify_sign(const sign_string& s, int threads) {
    verification_report rep;
    rep.check = "bijection";
    rep.subject = format_signs(s);
    auto t0 = std::chrono::steady_clock::now();

    std::vector<tableau> fillings = enumerate_fillings(s);
    std::vector<std::string> codes(fillings.size());

    run_cases(static_cast<long long>(fillings.size()), threads, rep, bucket::round_trip,
              [&](long long k, note_sink& sink) {
                  const tableau& t = fillings[k];
                  web w;
                  standardized st;
                  if (s.empty()) {
                      w = empty_web();
                  } else {
                      st = standardize(t, s);
                      tableau conj = conjugate(st.tab);  // 3-row standard form
                      m_diagram md = build_m_diagram(conj);
                      web raw = web_from_m_diagram(md);

                      // tau pairs of the (3-row) standardization must meet at an internal vertex
                      for (auto [a, b] : tau_set(conj)) {
                          std::set<int> na, nb2;
                          for (const web_edge& e : raw.edges) {
                              if (e.from == a - 1 || e.to == a - 1) na.insert(e.from == a - 1 ? e.to : e.from);
                              if (e.from == b - 1 || e.to == b - 1) nb2.insert(e.from == b - 1 ? e.to : e.from);
                          }
                          bool shared = false;
                          for (int v : na)
                              if (v >= raw.boundary_count() && nb2.count(v)) shared = true;
                          if (!shared)
                              sink.add(k, bucket::tau,
                                       format_tableau(t) + ": tau pair (" + std::to_string(a) + "," +
                                           std::to_string(b) + ") has no shared internal neighbor");
                      }
                      w = contract_minus_pairs(raw, st.pm, s);
                  }
                  if (w.signs != s) {
                      sink.add(k, bucket::round_trip, "boundary signs came out as " + format_signs(w.signs));
                      return;
                  }
                  if (std::string prob = validity_problems(w); !prob.empty()) {
                      sink.add(k, bucket::round_trip, format_tableau(t) + " gave an invalid web: " + prob);
                      return;
                  }
                  if (std::string prob = ellipticity_problems(w); !prob.empty()) {
                      sink.add(k, bucket::ellipticity, format_tableau(t) + ": " + prob);
                      return;
                  }
                  tableau back = web_to_tableau(w);
                  if (!(back == t)) {
                      sink.add(k, bucket::round_trip,
                               format_tableau(t) + " round-tripped to " + format_tableau(back));
                      return;
                  }
                  codes[k] = canonical_code(w);
              });

    merge_codes(rep, codes, [&](long long k) { return format_tableau(fillings[k]); });
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

verification_report verify_rotation(const sign_string& s, int threads) {
    verification_report rep;
    rep.check = "rotation";
    rep.subject = format_signs(s);
    auto t0 = std::chrono::steady_clock::now();

    std::vector<tableau> fillings = enumerate_fillings(s);
    std::vector<std::string> codes(fillings.size());
    const sign_string rs = rotate_left(s);

    run_cases(static_cast<long long>(fillings.size()), threads, rep, bucket::rotation,
              [&](long long k, note_sink& sink) {
                  const tableau& t = fillings[k];
                  web rotated = rotate(tableau_to_web(t, s));
                  tableau promoted = s.empty() ? t : jdt_promote(t);
                  web direct = tableau_to_web(promoted, rs);
                  std::string rc = canonical_code(rotated);
                  if (rc != canonical_code(direct)) {
                      sink.add(k, bucket::rotation, "rotate(web(" + format_tableau(t) + ")) differs from web(" +
                                                        format_tableau(promoted) + ")");
                      return;
                  }
                  if (std::string prob = validity_problems(rotated); !prob.empty()) {
                      sink.add(k, bucket::rotation, "rotated web invalid: " + prob);
                      return;
                  }
                  tableau back = web_to_tableau(rotated);
                  if (!(back == promoted)) {
                      sink.add(k, bucket::rotation, "rotated web reads back as " + format_tableau(back) +
                                                        ", promotion gives " + format_tableau(promoted));
                      return;
                  }
                  // standardization lemma: promoting the filling standardizes to the
                  // promotion (once per copy of value 1) of the standardization
                  if (!s.empty()) {
                      tableau lhs = standardize(promoted, rs).tab;
                      tableau rhs = standardize(t, s).tab;
                      int passes = s.front() == sign::minus ? 2 : 1;
                      for (int p = 0; p < passes; ++p) rhs = jdt_promote(rhs);
                      if (!(lhs == rhs)) {
                          sink.add(k, bucket::rotation,
                                   "standardization of promote(" + format_tableau(t) + ") is " +
                                       format_tableau(lhs) + ", promoted standardization is " + format_tableau(rhs));
                          return;
                      }
                  }
                  codes[k] = rc;
              });

    merge_codes(rep, codes, [&](long long k) { return format_tableau(fillings[k]); });
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

verification_report verify_join(const sign_string& s1, const sign_string& s2, int i, int threads) {
    verification_report rep;
    rep.check = "join";
    rep.subject = format_signs(s1) + " + " + format_signs(s2) + " at " + std::to_string(i);
    auto t0 = std::chrono::steady_clock::now();

    if (i < 0 || i > int(s1.size()))
        fail(errc::index_out_of_range,
             "join position " + std::to_string(i) + " outside 0.." + std::to_string(s1.size()));

    std::vector<tableau> f1 = enumerate_fillings(s1);
    std::vector<tableau> f2 = enumerate_fillings(s2);
    sign_string spliced(s1.begin(), s1.begin() + i);
    spliced.insert(spliced.end(), s2.begin(), s2.end());
    spliced.insert(spliced.end(), s1.begin() + i, s1.end());

    long long pair_count = static_cast<long long>(f1.size()) * static_cast<long long>(f2.size());
    std::vector<std::string> codes(pair_count);

    run_cases(pair_count, threads, rep, bucket::join, [&](long long k, note_sink& sink) {
        const tableau& t1 = f1[k / f2.size()];
        const tableau& t2 = f2[k % f2.size()];
        web joined = join(tableau_to_web(t1, s1), tableau_to_web(t2, s2), i);
        tableau merged = shuffle(t2, t1, i);
        web direct = tableau_to_web(merged, spliced);
        std::string jc = canonical_code(joined);
        if (jc != canonical_code(direct)) {
            sink.add(k, bucket::join, "join(web(" + format_tableau(t1) + "), web(" + format_tableau(t2) + "), " +
                                          std::to_string(i) + ") differs from web(" + format_tableau(merged) + ")");
            return;
        }
        if (std::string prob = validity_problems(joined); !prob.empty()) {
            sink.add(k, bucket::join, "joined web invalid: " + prob);
            return;
        }
        if (std::string prob = ellipticity_problems(joined); !prob.empty()) {
            sink.add(k, bucket::ellipticity, "joined web elliptic: " + prob);
            return;
        }
        codes[k] = jc;
    });

    merge_codes(rep, codes, [&](long long k) {
        return "(" + format_tableau(f1[k / f2.size()]) + ", " + format_tableau(f2[k % f2.size()]) + ")";
    });
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

std::string report_table(const verification_report& r) {
    std::ostringstream out;
    out << (r.success() ? "PASS" : "FAIL") << " " << r.check << " " << r.subject << ": " << r.filling_count
        << " fillings, " << r.web_count << " distinct webs";
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.3fs)", r.elapsed_seconds);
    out << buf;
    auto dump = [&](const char* label, const std::vector<std::string>& list) {
        for (const std::string& note : list) out << "\n  " << label << ": " << note;
    };
    dump("round-trip", r.round_trip_failures);
    dump("distinctness", r.distinctness_collisions);
    dump("ellipticity", r.ellipticity_violations);
    dump("tau", r.tau_failures);
    dump("rotation", r.rotation_mismatches);
    dump("join", r.join_mismatches);
    return out.str();
}

}  // namespace sl3web
