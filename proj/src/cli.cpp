#include "dic/cli.hpp"

#include <CLI11.hpp>
#include <csignal>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>

#include "dic/errors.hpp"
#include "dic/games.hpp"
#include "dic/server.hpp"
#include "dic/tpa.hpp"

namespace fs = std::filesystem;

namespace dic::cli {

fs::path resolve_store(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kStoreEnv); env != nullptr && *env != '\0') return env;
  return kDefaultStore;
}

namespace {

struct Options {
  std::string store;
  std::string scheme = "gs";
  std::string bench_scheme = "all";
  std::uint64_t c = 10;
  std::optional<std::uint64_t> seed;
  std::string endpoint = "inproc";
  std::string file;
  std::string name;
  std::string host = "127.0.0.1";
  std::uint16_t port = 7070;
  std::string target;
  std::string adversary = "auto";
  std::uint64_t trials = 200;
  std::uint64_t blocks = 0;
  std::uint64_t reps = 5;
  bool force = false;
};

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  template <class T>
  Report& kv(std::string_view key, const T& value) {
    out_ << key << '=' << value << '\n';
    return *this;
  }
  Report& fixed(std::string_view key, double value, int digits = 4) {
    out_ << key << '=' << std::fixed << std::setprecision(digits) << value << std::defaultfloat << '\n';
    return *this;
  }

 private:
  std::ostream& out_;
};

Bytes read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StoreError("cannot read " + p.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_all(const fs::path& p, ByteSpan data) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw StoreError("cannot write " + p.string());
}

struct Context {
  fs::path store;
  SchemeId scheme;
  std::uint64_t seed;
  Rng rng;

  fs::path sk_path() const { return store / "keys" / (std::string(scheme_name(scheme)) + ".sk"); }
  fs::path pk_path() const { return store / "keys" / (std::string(scheme_name(scheme)) + ".pk"); }
  fs::path server_dir() const { return store / "server"; }
};

Context make_context(const Options& o, std::string_view scheme) {
  const std::uint64_t seed = o.seed ? *o.seed : Rng::entropy_seed();
  return {resolve_store(o.store), parse_scheme(scheme), seed, Rng(seed)};
}

// Runs fn with a transport to the configured endpoint.
template <class F>
auto with_transport(const Context& ctx, const Options& o, F&& fn) {
  const auto ep = Endpoint::parse(o.endpoint);
  if (ep.inproc) {
    CloudServer server(ctx.server_dir(), ctx.rng.fork(0x5e7e).next_u64());
    InProcTransport t(server);
    return fn(t);
  }
  SocketTransport t(ep.host, ep.port);
  return fn(t);
}

std::string base_name(const std::string& path) {
  const auto n = fs::path(path).filename().string();
  if (n.empty()) throw ArgumentError("file name is empty");
  return n;
}

int cmd_keygen(const Options& o, std::ostream& out) {
  auto ctx = make_context(o, o.scheme);
  if (fs::exists(ctx.sk_path()) && !o.force) {
    throw ArgumentError("keys exist at " + ctx.sk_path().string() + " (use --force to replace)");
  }
  const auto sk = scheme::keygen(ctx.scheme, ctx.rng);
  const auto pk = scheme::encode_public_key(scheme::public_key(sk));
  write_all(ctx.sk_path(), scheme::encode_secret_keys(sk));
  write_all(ctx.pk_path(), pk);
  Report(out)
      .kv("command", "keygen")
      .kv("scheme", scheme_name(ctx.scheme))
      .kv("seed", ctx.seed)
      .kv("public_key_bytes", pk.size())
      .kv("public_key_sha256", to_hex(sha256(pk)));
  return kExitOk;
}

int cmd_upload(const Options& o, std::ostream& out) {
  auto ctx = make_context(o, o.scheme);
  const auto sk = scheme::decode_secret_keys(read_all(ctx.sk_path()));
  if (scheme::scheme_of(sk) != ctx.scheme) throw FormatError("key file holds another scheme");
  const auto data = read_all(o.file);
  const auto name = base_name(o.file);
  auto file = chunk_file(data, to_bytes(name));
  const auto n = file.n();
  with_transport(ctx, o, [&](Transport& t) {
    upload_file(t, sk, std::move(file), ctx.rng);
    return 0;
  });
  Report(out)
      .kv("command", "upload")
      .kv("scheme", scheme_name(ctx.scheme))
      .kv("name", name)
      .kv("bytes", data.size())
      .kv("blocks", n)
      .kv("endpoint", o.endpoint)
      .kv("seed", ctx.seed)
      .kv("status", "stored");
  return kExitOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
  auto ctx = make_context(o, o.scheme);
  if (o.c == 0) throw ArgumentError("-c must be at least 1");
  const auto pk = scheme::decode_public_key(read_all(ctx.pk_path()));
  if (scheme::scheme_of(pk) != ctx.scheme) throw FormatError("key file holds another scheme");
  const auto name = base_name(o.name);
  const auto rep =
      with_transport(ctx, o, [&](Transport& t) { return tpa_audit(t, pk, to_bytes(name), o.c, ctx.rng); });
  Report r(out);
  r.kv("command", "audit")
      .kv("scheme", scheme_name(ctx.scheme))
      .kv("name", name)
      .kv("endpoint", o.endpoint)
      .kv("seed", ctx.seed)
      .kv("n", rep.n)
      .kv("c", rep.c)
      .kv("status", status_name(rep.status))
      .kv("verdict", verdict_name(rep.verdict));
  if (!rep.detail.empty()) r.kv("detail", rep.detail);
  return rep.verdict == Verdict::valid ? kExitOk : kExitFalse;
}

int cmd_serve(const Options& o, std::ostream& out) {
  auto ctx = make_context(o, o.scheme);
  CloudServer server(ctx.server_dir(), ctx.seed);
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  SocketServer front(server, o.host, o.port);
  Report(out)
      .kv("command", "serve")
      .kv("store", ctx.server_dir().string())
      .kv("seed", ctx.seed)
      .kv("listening", o.host + ":" + std::to_string(front.port()));
  out.flush();
  front.start();
  int sig = 0;
  sigwait(&set, &sig);
  front.stop();
  Report(out).kv("stopped", sig == SIGINT ? "SIGINT" : "SIGTERM");
  return kExitOk;
}

int cmd_attack(const Options& o, std::ostream& out) {
  auto ctx = make_context(o, o.target);
  games::AdversaryKind kind;
  if (o.adversary == "auto") {
    kind = ctx.scheme == SchemeId::mht ? games::AdversaryKind::fig2 : games::AdversaryKind::fig4;
  } else {
    kind = games::parse_adversary(o.adversary);
  }
  const std::uint64_t n = o.blocks == 0 ? 4 : o.blocks;
  if (o.trials == 0) throw ArgumentError("--trials must be at least 1");
  const auto est = games::estimate_advantage(ctx.scheme, games::factory(kind, n), o.trials, ctx.rng);
  Report(out)
      .kv("command", "attack")
      .kv("scheme", scheme_name(ctx.scheme))
      .kv("adversary", games::adversary_name(kind))
      .kv("trials", est.trials)
      .kv("blocks", n)
      .kv("seed", ctx.seed)
      .kv("successes", est.successes)
      .kv("applicable", est.applicable)
      .fixed("advantage", est.advantage)
      .fixed("radius95", est.radius)
      .kv("transcripts_sha256", to_hex(est.transcripts));
  return kExitOk;
}

int cmd_soundness(const Options& o, std::ostream& out) {
  auto ctx = make_context(o, o.scheme);
  const std::uint64_t n = o.blocks == 0 ? 8 : o.blocks;
  const std::uint64_t c = std::min(o.c, n);
  if (o.trials == 0 || c == 0) throw ArgumentError("--trials and -c must be at least 1");
  const auto s = games::run_soundness_trials(ctx.scheme, o.trials, n, c, ctx.rng);
  Report r(out);
  r.kv("command", "soundness")
      .kv("scheme", scheme_name(ctx.scheme))
      .kv("trials", s.trials)
      .kv("blocks", n)
      .kv("c", c)
      .kv("seed", ctx.seed)
      .kv("accepted", s.accepted)
      .kv("rejected", s.trials - s.accepted);
  if (ctx.scheme == SchemeId::gs) r.kv("extraction_mismatches", s.extraction_mismatches);
  return s.accepted == 0 ? kExitOk : kExitFalse;
}

double median_ms(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

int cmd_bench(const Options& o, std::ostream& out) {
  const std::uint64_t seed = o.seed ? *o.seed : Rng::entropy_seed();
  const std::uint64_t n = o.blocks == 0 ? 64 : o.blocks;
  const std::uint64_t c = std::min(o.c, n);
  if (c == 0 || o.reps == 0) throw ArgumentError("-c and --reps must be at least 1");
  std::vector<SchemeId> ids;
  if (o.bench_scheme == "all") {
    ids.assign(std::begin(scheme::kAllSchemes), std::end(scheme::kAllSchemes));
  } else {
    ids.push_back(parse_scheme(o.bench_scheme));
  }
  Report r(out);
  r.kv("command", "bench").kv("blocks", n).kv("c", c).kv("reps", o.reps).kv("seed", seed);
  using clock = std::chrono::steady_clock;
  for (const auto id : ids) {
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(id));
    const auto sk = scheme::keygen(id, rng);
    const auto pk = scheme::public_key(sk);
    const auto t0 = clock::now();
    const auto bundle = scheme::token_gen(sk, BlockVector{games::random_name(rng), games::random_blocks(n, rng)}, rng);
    const double token_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    std::vector<double> respond_ms, verify_ms;
    std::size_t proof_bytes = 0;
    for (std::uint64_t k = 0; k < o.reps; ++k) {
      const auto chal = sample_challenge(n, c, rng);
      const auto t1 = clock::now();
      const auto proof = scheme::respond(bundle, pk, chal, rng);
      const auto t2 = clock::now();
      const auto ok = scheme::verify(pk, bundle.tag, n, chal, proof);
      const auto t3 = clock::now();
      if (!ok) throw ProtocolError("bench: honest proof rejected");
      proof_bytes = scheme::encode_proof(proof).size();
      respond_ms.push_back(std::chrono::duration<double, std::milli>(t2 - t1).count());
      verify_ms.push_back(std::chrono::duration<double, std::milli>(t3 - t2).count());
    }
    const std::string p = std::string(scheme_name(id)) + ".";
    r.kv(p + "proof_bytes", proof_bytes)
        .kv(p + "public_key_bytes", scheme::encode_public_key(pk).size())
        .fixed(p + "token_gen_ms", token_ms, 2)
        .fixed(p + "respond_ms", median_ms(respond_ms), 2)
        .fixed(p + "verify_ms", median_ms(verify_ms), 2);
  }
  return kExitOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Remote data integrity checking: keys, upload, audit, games"};
  app.name("dic");
  app.require_subcommand(1);
  Options o;
  app.add_option("--store", o.store, "Store directory (overrides $DIC_STORE_DIR)");

  const auto schemes = CLI::IsMember({"mht", "blinded", "gs"});
  auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "RNG seed (default: fresh entropy)"); };
  auto scheme_opt = [&](CLI::App* sub) { sub->add_option("--scheme", o.scheme, "mht | blinded | gs")->check(schemes); };
  auto endpoint_opt = [&](CLI::App* sub) {
    sub->add_option("--endpoint", o.endpoint, "inproc or host:port");
  };

  auto* keygen = app.add_subcommand("keygen", "Generate the data owner's keys");
  scheme_opt(keygen);
  seed_opt(keygen);
  keygen->add_flag("--force", o.force, "Replace existing keys");

  auto* upload = app.add_subcommand("upload", "Tag a file and store it on the server");
  upload->add_option("file", o.file, "File to upload")->required();
  scheme_opt(upload);
  seed_opt(upload);
  endpoint_opt(upload);

  auto* audit = app.add_subcommand("audit", "Audit a stored file as the third-party auditor");
  audit->add_option("name", o.name, "Stored file name (a path is reduced to its base name)")->required();
  scheme_opt(audit);
  seed_opt(audit);
  endpoint_opt(audit);
  audit->add_option("-c", o.c, "Challenge size (capped at n)")->check(CLI::PositiveNumber);

  auto* serve = app.add_subcommand("serve", "Run the cloud server on a TCP port");
  serve->add_option("--host", o.host, "Bind address");
  serve->add_option("--port", o.port, "TCP port (0 = ephemeral)");
  seed_opt(serve);

  auto* attack = app.add_subcommand("attack", "Zero-knowledge game against a scheme");
  attack->add_option("--target", o.target, "mht | blinded | gs")->required()->check(schemes);
  attack->add_option("--adversary", o.adversary, "fig2 | fig4 | random | auto")
      ->check(CLI::IsMember({"fig2", "fig4", "random", "auto"}));
  attack->add_option("--trials", o.trials, "Number of games")->check(CLI::PositiveNumber);
  attack->add_option("--blocks", o.blocks, "Blocks per challenge file (default 4)");
  seed_opt(attack);

  auto* sound = app.add_subcommand("soundness", "Single-block tampering games");
  scheme_opt(sound);
  sound->add_option("--trials", o.trials, "Number of games")->check(CLI::PositiveNumber);
  sound->add_option("--blocks", o.blocks, "Blocks per file (default 8)");
  sound->add_option("-c", o.c, "Challenge size (capped at n)")->check(CLI::PositiveNumber);
  seed_opt(sound);

  auto* bench = app.add_subcommand("bench", "Proof sizes and respond/verify timings");
  bench->add_option("--scheme", o.bench_scheme, "mht | blinded | gs | all")
      ->check(CLI::IsMember({"mht", "blinded", "gs", "all"}));
  bench->add_option("--blocks", o.blocks, "Blocks per file (default 64)");
  bench->add_option("-c", o.c, "Challenge size")->check(CLI::PositiveNumber);
  bench->add_option("--reps", o.reps, "Repetitions per scheme")->check(CLI::PositiveNumber);
  seed_opt(bench);

  for (auto* sub : {keygen, upload, audit, serve, attack, sound, bench}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keygen) return cmd_keygen(o, out);
    if (*upload) return cmd_upload(o, out);
    if (*audit) return cmd_audit(o, out);
    if (*serve) return cmd_serve(o, out);
    if (*attack) return cmd_attack(o, out);
    if (*sound) return cmd_soundness(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dic::cli
