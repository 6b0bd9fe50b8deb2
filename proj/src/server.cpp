#include "dic/server.hpp"

#include "dic/errors.hpp"

namespace dic {

using wire::Envelope;
using wire::MessageType;

CloudServer::CloudServer(std::filesystem::path store_root, std::uint64_t seed)
    : store_(std::move(store_root)), base_(seed) {}

Envelope CloudServer::dispatch(const Envelope& req) {
  switch (req.type) {
    case MessageType::upload: {
      auto up = wire::UploadBody::decode(req.scheme, req.body);
      Bytes name = up.bundle.file.name;
      store_.put({std::move(up.pk), std::move(up.bundle)});
      ByteWriter w;
      w.blob(name);
      return wire::make(req.scheme, MessageType::upload_ack, std::move(w).take());
    }
    case MessageType::get_tag: {
      const auto rec = store_.load(req.body);
      if (rec.bundle.scheme() != req.scheme) throw ProtocolError("file is stored under another scheme");
      return wire::make(req.scheme, MessageType::tag, wire::TagBody{rec.bundle.tag, rec.bundle.file.n()}.encode());
    }
    case MessageType::challenge: {
      const auto body = wire::ChallengeBody::decode(req.body);
      const auto rec = store_.load(body.name);
      if (rec.bundle.scheme() != req.scheme) throw ProtocolError("file is stored under another scheme");
      body.chal.validate(rec.bundle.file.n());
      Rng rng = base_.fork(calls_.fetch_add(1));
      const auto proof = scheme::respond(rec.bundle, rec.pk, body.chal, rng);
      return wire::make(req.scheme, MessageType::response, scheme::encode_proof(proof));
    }
    default:
      throw ProtocolError("server does not accept " + std::string(wire::message_name(req.type)));
  }
}

Envelope CloudServer::handle(const Envelope& req) {
  try {
    return dispatch(req);
  } catch (const std::exception& e) {
    return wire::make_error(req.scheme, e.what());
  }
}

Bytes CloudServer::handle_frame(ByteSpan frame) {
  Envelope req;
  try {
    req = wire::frame_decode(frame);
  } catch (const std::exception& e) {
    return wire::frame_encode(wire::make_error(SchemeId::mht, e.what()));
  }
  return wire::frame_encode(handle(req));
}

}  // namespace dic
