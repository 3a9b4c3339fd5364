#include "tcpd/tools/cli.hpp"

#include "tcpd/oracle.hpp"
#include "tcpd/search.hpp"
#include "tcpd/tools/tensor_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace tcpd::cli {

namespace {

using json = nlohmann::ordered_json;

struct RankArgs {
    std::string input;
    std::size_t max_rank = 0;
    std::string algo = "rref";
    unsigned threads = 1;
};

struct BorderArgs {
    std::string input;
    int exponent = 1;
    std::size_t max_rank = 0;
    std::string algo = "dfs";
    unsigned threads = 1;
};

struct GenArgs {
    std::size_t m = 0, k = 0, n = 0;
    std::uint32_t p = 2;
    std::string out;
};

struct VerifyArgs {
    std::string input;
    std::string cpd;
};

json rref_counters(const SearchStats& s) {
    return {{"axis_ranks", s.axis_ranks},
            {"pruned", s.pruned},
            {"tail_assignments_total", s.tail_assignments_total},
            {"tail_assignments_processed", s.tail_assignments_processed},
            {"pairs_inspected", s.pairs_inspected}};
}

json dfs_counters(const SearchStats& s) {
    return {{"axis_ranks", s.axis_ranks},
            {"pruned", s.pruned},
            {"nodes", s.nodes},
            {"children", s.children},
            {"root_branches", s.root_branches},
            {"root_children_recursed", s.root_children_recursed}};
}

SearchOptions make_options(unsigned threads, std::ostream& err) {
    SearchOptions opts;
    opts.threads = threads;
    opts.progress = [&err](std::uint64_t done, std::uint64_t total) {
        err << "progress: " << done << "/" << total << '\n';
    };
    if (threads > 1)
        err << "note: running with " << threads
            << " threads; a different valid certificate may be returned on each run\n";
    return opts;
}

/// Re-evaluates before anything is printed; throws VerificationFailure.
template <ScalarRing Ring>
json certified(const Tensor<Ring>& target, const Cpd<Ring>& cpd, std::size_t max_rank, json doc) {
    verify_certificate(target, cpd, max_rank);
    doc["status"] = "found";
    doc["certificate_rank"] = cpd.rank();
    doc["verified"] = true;
    doc["certificate"] = io::to_json(cpd);
    return doc;
}

json header(const char* command, const std::string& algo, std::size_t max_rank, const Shape& shape) {
    // status is filled in last but listed first.
    return {{"command", command}, {"status", nullptr}, {"algo", algo}, {"max_rank", max_rank}, {"shape", shape}};
}

json run_rank(const RankArgs& a, std::ostream& err) {
    const auto input = io::read_tensor_file(a.input);
    const auto opts = make_options(a.threads, err);
    if (const auto* ring_t = std::get_if<Tensor<BorderRing>>(&input)) {
        json doc = header("rank", a.algo, a.max_rank, ring_t->shape());
        doc["p"] = ring_t->ring().field().modulus();
        doc["H"] = ring_t->ring().exponent();
        if (a.algo == "rref") throw InvalidArgument(a.input + ": --algo rref needs a field tensor (no \"H\" above 1)");
        if (a.algo == "oracle") {
            const auto r = oracle_border_rank(*ring_t, a.max_rank);
            if (!r.rank) return doc.update({{"status", "exhausted"}}), doc;
            doc["minimal_rank"] = *r.rank;
            return certified(*ring_t, *r.witness, a.max_rank, doc);
        }
        const auto out = border_dfs(*ring_t, a.max_rank, opts);
        doc["counters"] = dfs_counters(out.stats);
        if (!out.found()) return doc.update({{"status", "exhausted"}}), doc;
        return certified(*ring_t, *out.certificate, a.max_rank, doc);
    }
    const auto& t = std::get<Tensor<PrimeField>>(input);
    json doc = header("rank", a.algo, a.max_rank, t.shape());
    doc["p"] = t.ring().modulus();
    if (a.algo == "oracle") {
        const auto r = oracle_rank(t, a.max_rank);
        if (!r.rank) return doc.update({{"status", "exhausted"}}), doc;
        doc["minimal_rank"] = *r.rank;
        return certified(t, *r.witness, a.max_rank, doc);
    }
    const auto out = a.algo == "rref" ? rref_search(t, a.max_rank, opts) : dfs_search(t, a.max_rank, opts);
    doc["counters"] = a.algo == "rref" ? rref_counters(out.stats) : dfs_counters(out.stats);
    if (!out.found()) return doc.update({{"status", "exhausted"}}), doc;
    return certified(t, *out.certificate, a.max_rank, doc);
}

json run_border(const BorderArgs& a, std::ostream& err) {
    const auto input = io::read_tensor_file(a.input);
    const auto opts = make_options(a.threads, err);
    Tensor<BorderRing> target = std::visit(
        [&](const auto& t) -> Tensor<BorderRing> {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Tensor<PrimeField>>) {
                const BorderRing ring(t.ring(), a.exponent);
                return embed_scaled(t, ring, a.exponent - 1);
            } else {
                if (t.ring().exponent() != a.exponent)
                    throw InvalidArgument(a.input + ": H: file has exponent " + std::to_string(t.ring().exponent()) +
                                          ", --exponent is " + std::to_string(a.exponent));
                return t;
            }
        },
        input);
    json doc = header("border-rank", a.algo, a.max_rank, target.shape());
    doc["p"] = target.ring().field().modulus();
    doc["H"] = a.exponent;
    doc["target"] = std::holds_alternative<Tensor<PrimeField>>(input) ? "x^(H-1) T" : "T";

    std::optional<std::size_t> rank;
    std::optional<Cpd<BorderRing>> cert;
    if (a.algo == "oracle") {
        auto r = oracle_border_rank(target, a.max_rank);
        rank = r.rank;
        cert = std::move(r.witness);
    } else {
        auto r = min_border_rank(target, a.max_rank, opts);
        rank = r.rank;
        cert = std::move(r.certificate);
        doc["counters"] = dfs_counters(r.stats);
    }
    if (!rank) return doc.update({{"status", "exhausted"}}), doc;
    doc["border_rank"] = *rank;
    return certified(target, *cert, a.max_rank, doc);
}

json run_gen(const GenArgs& a) {
    if (!is_prime(a.p) || a.p > PrimeField::kMaxModulus)
        throw InvalidArgument("--p: " + std::to_string(a.p) + " is not a prime up to " +
                              std::to_string(PrimeField::kMaxModulus));
    const auto t = mm_tensor(a.m, a.k, a.n, PrimeField(a.p));
    io::write_document(a.out, io::to_json(t));
    return {{"command", "gen-mm"}, {"m", a.m}, {"k", a.k}, {"n", a.n}, {"p", a.p}, {"shape", t.shape()}, {"out", a.out}};
}

std::pair<json, int> run_verify(const VerifyArgs& a) {
    const auto tensor = io::read_tensor_file(a.input);
    const auto cpd = io::read_cpd_file(a.cpd);
    if (tensor.index() != cpd.index())
        throw InvalidArgument(a.cpd + ": H: certificate ring differs from the tensor's ring");
    json doc = {{"command", "verify"}, {"status", nullptr}};
    bool pass = false;
    std::visit(
        [&](const auto& t) {
            using C = Cpd<std::decay_t<decltype(t.ring())>>;
            const auto& c = std::get<C>(cpd);
            if (!c.factors.empty() && !(c.factors.front().ring() == t.ring()))
                throw InvalidArgument(a.cpd + ": p: certificate ring differs from the tensor's ring");
            if (c.shape() != t.shape())
                throw InvalidArgument(a.cpd + ": shape: certificate shape " + shape_string(c.shape()) +
                                      " differs from tensor shape " + shape_string(t.shape()));
            doc["rank"] = c.rank();
            doc["shape"] = t.shape();
            if (c.factors.empty()) {
                pass = t.is_zero();
                return;
            }
            const auto value = cpd_eval(c);
            std::size_t mismatches = 0;
            std::optional<std::size_t> first;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (!(value[i] == t[i])) {
                    ++mismatches;
                    if (!first) first = i;
                }
            pass = mismatches == 0;
            if (!pass) {
                doc["mismatched_entries"] = mismatches;
                doc["first_mismatch"] = *first;
            }
        },
        tensor);
    doc["status"] = pass ? "pass" : "fail";
    return {doc, pass ? kExitDecided : kExitVerifyFailed};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tensor rank and border rank over finite fields"};
    app.require_subcommand(1);

    RankArgs rank;
    auto* rank_cmd = app.add_subcommand("rank", "decide whether a tensor has a CPD with at most R columns");
    rank_cmd->add_option("--input", rank.input, "tensor file")->required();
    rank_cmd->add_option("--max-rank", rank.max_rank, "rank budget R")->required();
    rank_cmd->add_option("--algo", rank.algo, "rref, dfs or oracle")->check(CLI::IsMember({"rref", "dfs", "oracle"}));
    rank_cmd->add_option("--threads", rank.threads, "worker threads")->check(CLI::Range(1u, 1024u));

    BorderArgs border;
    auto* border_cmd = app.add_subcommand("border-rank", "smallest R <= max-rank with a CPD of x^(H-1) T over F[x]/(x^H)");
    border_cmd->add_option("--input", border.input, "tensor file")->required();
    border_cmd->add_option("--exponent", border.exponent, "H")->required()->check(CLI::Range(1, kMaxExponent));
    border_cmd->add_option("--max-rank", border.max_rank, "rank budget R")->required();
    border_cmd->add_option("--algo", border.algo, "dfs or oracle")->check(CLI::IsMember({"dfs", "oracle"}));
    border_cmd->add_option("--threads", border.threads, "worker threads")->check(CLI::Range(1u, 1024u));

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen-mm", "write the <m,k,n> matrix multiplication tensor");
    gen_cmd->add_option("--m", gen.m)->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    gen_cmd->add_option("--k", gen.k)->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    gen_cmd->add_option("--n", gen.n)->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    gen_cmd->add_option("--p", gen.p, "field modulus")->required();
    gen_cmd->add_option("--out", gen.out, "output tensor file")->required();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "re-evaluate a CPD certificate against a tensor");
    verify_cmd->add_option("--input", verify.input, "tensor file")->required();
    verify_cmd->add_option("--cpd", verify.cpd, "certificate file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitDecided : kExitInputError;
    }

    try {
        json doc;
        int status = kExitDecided;
        if (*rank_cmd) doc = run_rank(rank, err);
        else if (*border_cmd) doc = run_border(border, err);
        else if (*gen_cmd) doc = run_gen(gen);
        else std::tie(doc, status) = run_verify(verify);
        out << io::format_document(doc) << '\n';
        return status;
    } catch (const VerificationFailure& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace tcpd::cli
