#include "torelli/certificate_check.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <set>

namespace torelli {

namespace {

using Big = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;
using J = nlohmann::ordered_json;

struct Checker {
    CertificateCheck out;

    void expect(bool cond, const std::string& what) {
        ++out.checked;
        if (!cond) out.mismatches.push_back(what);
    }

    // strict "p/q" with q > 0 and gcd(p, q) = 1
    std::optional<Q> fraction(const J& v, const std::string& where) {
        if (!v.is_string()) {
            expect(false, where + ": not a fraction string");
            return std::nullopt;
        }
        const std::string s = v.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) throw std::invalid_argument("no slash");
            Big p(s.substr(0, slash)), q(s.substr(slash + 1));
            expect(q > 0 && gcd(p, q) == 1, where + ": fraction not in lowest terms: " + s);
            if (q <= 0) return std::nullopt;
            return Q(p, q);
        } catch (const std::exception&) {
            expect(false, where + ": malformed fraction " + s);
            return std::nullopt;
        }
    }

    void same_fraction(const J& v, const std::optional<Q>& want, const std::string& where) {
        if (!want) {
            expect(v.is_null(), where + ": expected undefined");
            return;
        }
        auto got = fraction(v, where);
        expect(got && *got == *want, where + ": value differs");
    }
};

std::optional<Q> ratio(const Q& num, const Q& den) {
    if (den <= 0) return std::nullopt;
    return num / den;
}

int ceil4(int k) { return (k + 3) / 4; }

}  // namespace

CertificateCheck check_certificate(const J& cert) {
    Checker c;
    try {
        c.expect(cert.at("kind") == "distance_certificate", "kind");
        c.expect(cert.at("version") == 1, "version");
        const int g = cert.at("surface").at("g");
        const int n = cert.at("surface").at("n");
        const int N = cert.at("N");
        c.expect(N >= 1, "N must be positive");
        c.expect(cert.at("surface").at("euler") == 2 - 2 * g - n, "euler characteristic");

        // chain data
        std::vector<std::string> names;
        std::map<std::string, char> family;
        for (const auto& cj : cert.at("data").at("curves")) {
            names.push_back(cj.at("name"));
            family[names.back()] = cj.at("family").get<std::string>()[0];
        }
        const std::string delta = cert.at("delta"), gamma = cert.at("gamma");
        c.expect(family.count(delta) == 1, "delta is not a chain curve");
        c.expect(family.count(gamma) == 0, "gamma must not be a chain curve");
        std::map<std::string, std::map<std::string, int>> inter;
        for (const auto& t : cert.at("data").at("intersections")) {
            std::string a = t.at(0), b = t.at(1);
            int i = t.at(2);
            c.expect(i > 0, "intersection triples must be positive");
            inter[a][b] = i;
            inter[b][a] = i;
        }
        std::vector<std::pair<std::string, int>> word;
        for (const auto& l : cert.at("data").at("word")) {
            word.emplace_back(l.at(0), l.at(1));
            c.expect(family.count(word.back().first) == 1, "word letter is not a chain curve");
        }
        // each A curve once with +1, each B curve once with -1
        std::map<std::string, int> seen;
        for (const auto& [w, p] : word) seen[w] += p;
        for (const auto& [name, fam] : family) {
            if (fam == 'A') c.expect(seen[name] == 1, "A curve " + name + " not twisted once positively");
            if (fam == 'B') c.expect(seen[name] == -1, "B curve " + name + " not twisted once negatively");
            for (const auto& [other, i] : inter[name])
                if (family.count(other)) c.expect(family[other] != fam || i == 0, "family overlap " + name + "/" + other);
        }

        // weight iteration
        std::map<std::string, Big> w;
        for (const auto& nm : names) w[nm] = 0;
        w[delta] = 1;
        auto support = [&]() {
            std::set<std::string> s;
            for (const auto& [nm, x] : w)
                if (x != 0) s.insert(nm);
            return s;
        };
        const auto& trace = cert.at("trace");
        c.expect(static_cast<int>(trace.size()) == N + 1, "trace length");
        std::set<std::string> prev;
        for (int step = 0; step <= N && step < static_cast<int>(trace.size()); ++step) {
            if (step > 0)
                for (auto it = word.rbegin(); it != word.rend(); ++it) {
                    const std::string& tw = it->first;
                    for (int r = 0; r < std::abs(it->second); ++r) {
                        Big add = 0;
                        for (const auto& [other, i] : inter[tw])
                            if (w.count(other)) add += Big(i) * w[other];
                        w[tw] += add;
                    }
                }
            auto sup = support();
            std::set<std::string> listed;
            for (const auto& nm : trace[step]) listed.insert(nm.get<std::string>());
            c.expect(sup == listed, "support differs at step " + std::to_string(step));
            c.expect(std::includes(sup.begin(), sup.end(), prev.begin(), prev.end()),
                     "support not nested at step " + std::to_string(step));
            prev = sup;
        }
        std::set<std::string> checked_curves;
        for (const auto& t : cert.at("terminal_disjointness")) {
            std::string nm = t.at("curve");
            checked_curves.insert(nm);
            int recomputed = inter[gamma].count(nm) ? inter[gamma][nm] : 0;
            c.expect(t.at("intersection") == recomputed, "listed intersection with " + nm);
            c.expect(recomputed == 0, "gamma meets " + nm);
        }
        c.expect(checked_curves == prev, "terminal checks do not cover the final support");
        c.expect(cert.at("data").at("gamma_witness").at("pairing") != 0, "gamma witness pairing is zero");

        // bound chain
        const Q bound(2, N);
        c.same_fraction(cert.at("bound"), bound, "bound");
        const auto& ch = cert.at("chain");
        c.expect(ch.at("N") == N && ch.at("g") == g && ch.at("n") == n, "chain header");
        c.same_fraction(ch.at("certified"), bound, "chain certified");
        const int chi = 2 * g + n - 2;
        const std::optional<Q> final_link = ratio(32, Q(chi - 18));
        c.same_fraction(ch.at("chain_final"), final_link, "chain final");
        c.expect(ch.at("final_domain_ok") == (chi > 18), "final domain flag");
        const int m = g % 2 == 0 ? (g - 2) / 2 : (g - 3) / 2;
        const int k = m % 2 == 0 ? m : m + 1;
        c.expect(cert.at("params").at("k") == k, "k");
        const int n_claim = ceil4(k) + n / 4;
        c.expect(cert.at("params").at("N_claim") == n_claim, "N_claim");
        const auto& links = ch.at("links");
        c.expect(links.size() >= 3, "chain too short");
        std::vector<std::optional<Q>> values;
        for (size_t i = 0; i < links.size(); ++i) {
            const auto& v = links[i].at("value");
            values.push_back(v.is_null() ? std::nullopt : c.fraction(v, "link " + std::to_string(i)));
        }
        c.expect(values.front() && *values.front() == bound, "first link is 2/N");
        c.expect(values.size() > 1 && values[1] && *values[1] == Q(2, n_claim), "second link is 2/N_claim");
        c.expect(values.back() == final_link, "last link is the chain final value");
        bool all_hold = true;
        for (size_t i = 0; i + 1 < links.size(); ++i) {
            const auto& rel = links[i].at("relation_to_next");
            std::string r = rel.at("relation");
            std::optional<bool> want;
            if (values[i] && values[i + 1]) {
                const Q &a = *values[i], &b = *values[i + 1];
                want = r == "<" ? a < b : r == "=" ? a == b : a <= b;
            }
            if (want) {
                c.expect(rel.at("holds") == *want, "verdict of link " + std::to_string(i));
                all_hold = all_hold && *want;
            } else {
                c.expect(rel.at("holds").is_null(), "verdict of undefined link " + std::to_string(i));
            }
        }
        std::optional<bool> e2e;
        if (final_link) e2e = bound <= *final_link;
        if (e2e) {
            c.expect(ch.at("end_to_end") == *e2e, "end-to-end verdict");
            all_hold = all_hold && *e2e;
        } else {
            c.expect(ch.at("end_to_end").is_null(), "end-to-end verdict should be undefined");
        }
        c.expect(ch.at("all_defined_hold") == all_hold, "overall verdict");
        Big x = 2 * g - 2 + n;
        Big den = 18 * x * x + 30 * x - 10 * n;
        std::optional<Q> thr;
        if (den > 0) thr = Q(1, den);
        c.same_fraction(ch.at("threshold"), thr, "threshold");
        if (thr && final_link) c.expect(ch.at("threshold_below_final") == (*thr < *final_link), "threshold ordering");
    } catch (const nlohmann::json::exception& e) {
        c.expect(false, std::string("malformed certificate: ") + e.what());
    }
    return c.out;
}

}  // namespace torelli
