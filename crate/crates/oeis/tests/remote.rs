use std::io::{BufRead, BufReader, Write};
use std::net::{TcpListener, TcpStream};
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::{Duration, Instant};

use eulerforge_oeis::{bundled, bundled_ids, compare, Cache, OeisClient, OeisError, SequenceRecord, Source, Verdict};

/// Serves canned OEIS search responses and records each request path.
struct MockServer {
    url: String,
    requests: Arc<Mutex<Vec<String>>>,
}

fn respond(stream: &mut TcpStream, status: &str, body: &str) {
    let reply = format!(
        "HTTP/1.1 {status}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    );
    let _ = stream.write_all(reply.as_bytes());
}

impl MockServer {
    fn start(handler: fn(&str) -> (&'static str, String)) -> MockServer {
        let listener = TcpListener::bind("127.0.0.1:0").unwrap();
        let url = format!("http://{}", listener.local_addr().unwrap());
        let requests = Arc::new(Mutex::new(Vec::new()));
        let log = requests.clone();
        thread::spawn(move || {
            for stream in listener.incoming() {
                let Ok(mut stream) = stream else { break };
                let mut reader = BufReader::new(stream.try_clone().unwrap());
                let mut line = String::new();
                reader.read_line(&mut line).unwrap();
                loop {
                    let mut header = String::new();
                    if reader.read_line(&mut header).unwrap() == 0 || header == "\r\n" {
                        break;
                    }
                }
                let path = line.split_whitespace().nth(1).unwrap_or_default().to_string();
                log.lock().unwrap().push(path.clone());
                let (status, body) = handler(&path);
                respond(&mut stream, status, &body);
            }
        });
        MockServer { url, requests }
    }

    fn requests(&self) -> Vec<String> {
        self.requests.lock().unwrap().clone()
    }
}

fn requested_id(path: &str) -> String {
    path.split("id:").nth(1).unwrap_or_default().chars().take(7).collect()
}

/// Answers with the bundled terms, or a fixed sequence for ids not bundled.
fn oeis_like(path: &str) -> (&'static str, String) {
    let id = requested_id(path);
    let data = match bundled(&id) {
        Some(rec) => rec.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","),
        None => "1,1,1,2,1,2,1,5,2,2".to_string(),
    };
    ("200 OK", format!(r#"[{{"number": {}, "data": "{data}"}}]"#, id[1..].parse::<u32>().unwrap()))
}

fn client(server: &MockServer, cache: Option<Cache>) -> OeisClient {
    OeisClient::new()
        .with_base_url(&server.url)
        .with_cache(cache)
        .with_min_interval(Duration::ZERO)
}

#[test]
fn remote_fetch_is_cached_and_round_trips() {
    let server = MockServer::start(oeis_like);
    let dir = tempfile::tempdir().unwrap();
    let c = client(&server, Some(Cache::new(dir.path())));
    let remote = c.fetch("A000001").unwrap();
    assert_eq!(remote.source, Source::Remote);
    assert_eq!(server.requests(), vec!["/search?q=id:A000001&fmt=json".to_string()]);
    assert!(dir.path().join("A000001.txt").exists());

    let again = c.fetch("A000001").unwrap();
    assert_eq!(again.source, Source::Cache);
    assert_eq!(again.terms, remote.terms);
    assert_eq!(server.requests().len(), 1);
}

#[test]
fn bundled_ids_do_not_touch_the_network() {
    let server = MockServer::start(oeis_like);
    let c = client(&server, None);
    for id in bundled_ids() {
        assert_eq!(c.fetch(id).unwrap().source, Source::Bundled);
    }
    assert!(server.requests().is_empty());
}

#[test]
fn cache_takes_precedence_over_bundled() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let rec = SequenceRecord::new("A000108", vec![1.into(), 1.into(), 2.into()], Source::Remote).unwrap();
    cache.store(&rec).unwrap();
    let got = OeisClient::offline().with_cache(Some(cache)).fetch("A000108").unwrap();
    assert_eq!((got.source, got.terms), (Source::Cache, rec.terms));
}

#[test]
fn remote_verdicts_match_bundled_verdicts() {
    let server = MockServer::start(oeis_like);
    let c = client(&server, None);
    for id in bundled_ids() {
        let local = bundled(id).unwrap();
        let remote = c.fetch_remote(id).unwrap();
        let probe: Vec<_> = local.terms.iter().take(8).cloned().collect();
        let mut wrong = probe.clone();
        wrong[5] += 1;
        for computed in [&probe, &wrong] {
            assert_eq!(compare(computed, &local).verdict, compare(computed, &remote).verdict, "{id}");
        }
        assert_eq!(compare(&wrong, &remote).verdict, Verdict::MismatchAt(5));
    }
    assert_eq!(server.requests().len(), 11);
}

#[test]
fn requests_are_rate_limited() {
    let server = MockServer::start(oeis_like);
    let c = client(&server, None).with_min_interval(Duration::from_millis(300));
    let start = Instant::now();
    c.fetch_remote("A000001").unwrap();
    c.fetch_remote("A000002").unwrap();
    c.fetch_remote("A000003").unwrap();
    assert!(start.elapsed() >= Duration::from_millis(600));
}

#[test]
fn malformed_and_failed_responses() {
    let garbage = MockServer::start(|_| ("200 OK", "<html>busy</html>".to_string()));
    assert!(matches!(client(&garbage, None).fetch("A000001"), Err(OeisError::Malformed { .. })));
    let empty = MockServer::start(|_| ("200 OK", "null".to_string()));
    assert!(matches!(client(&empty, None).fetch("A000001"), Err(OeisError::Malformed { .. })));
    let down = MockServer::start(|_| ("503 Service Unavailable", String::new()));
    assert!(matches!(client(&down, None).fetch("A000001"), Err(OeisError::Network { .. })));

    let closed = TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}", closed.local_addr().unwrap());
    drop(closed);
    let c = OeisClient::new().with_base_url(url).with_cache(None);
    assert!(matches!(c.fetch("A000001"), Err(OeisError::Network { .. })));
    assert!(matches!(c.fetch("A00001"), Err(OeisError::InvalidId(_))));
}

#[test]
fn concurrent_cache_writes_leave_a_whole_file() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let handles: Vec<_> = (0..8)
        .map(|i| {
            let cache = cache.clone();
            thread::spawn(move || {
                let terms = (0..200).map(|n| (n * (i + 1)).into()).collect();
                cache.store(&SequenceRecord::new("A000045", terms, Source::Remote).unwrap()).unwrap();
            })
        })
        .collect();
    for h in handles {
        h.join().unwrap();
    }
    let rec = cache.load("A000045").unwrap().unwrap();
    assert_eq!(rec.terms.len(), 200);
    let step = rec.terms[1].clone();
    assert!(rec.terms.iter().enumerate().all(|(n, t)| *t == &step * n));
    let leftovers = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(leftovers, 1);
}
