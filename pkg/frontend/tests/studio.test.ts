// Scripted end-to-end studio session against the live analysis service.

import { describe, expect, inject, it } from 'vitest'

import { HttpApiClient } from '../src/api.js'
import { StudioState, documentBytes } from '../src/state.js'
import type { VertexId } from '../src/types.js'

type Face = [VertexId, VertexId, VertexId, VertexId]

/** Cyclic corner walk of the grid cell whose lower-left corner is (i, j). */
function gridFace(i: number, j: number): Face {
  return [`v${i}_${j}`, `v${i + 1}_${j}`, `v${i + 1}_${j + 1}`, `v${i}_${j + 1}`]
}

// This bracing pattern links every row and column ribbon together, so the
// verdict flips to Rigid exactly when the last brace lands.
const RIGID_PATTERN: Array<[number, number]> = [
  [0, 2], [1, 2], [2, 2], [1, 1], [1, 0],
]

function client(): HttpApiClient {
  return new HttpApiClient(inject('serviceUrl'))
}

describe('scripted studio session on the 3x3 grid', () => {
  it('flips to Rigid exactly at the fifth toggle, matching fresh analyze calls', async () => {
    const api = client()
    const doc = await api.generateGrid(3, 3)
    const state = new StudioState(api, doc)
    await state.analyzeNow()
    expect(state.snapshot().badge).toBe('Flexible')

    for (let i = 0; i < RIGID_PATTERN.length; i++) {
      const [ci, cj] = RIGID_PATTERN[i]
      await state.toggleBrace(gridFace(ci, cj))
      const badge = state.snapshot().badge
      expect(badge).toBe(i === RIGID_PATTERN.length - 1 ? 'Rigid' : 'Flexible')

      // the badge always equals a fresh direct analyze call on the document
      const fresh = await api.analyze(state.getDocument())
      expect(fresh.kind).toBe('ok')
      if (fresh.kind === 'ok') {
        expect(fresh.analysis.verdict.status).toBe(badge)
      }
    }
  })

  it('removing the closing brace goes back to Flexible with two components', async () => {
    const api = client()
    const state = new StudioState(api, await api.generateGrid(3, 3))
    await state.analyzeNow()
    for (const [ci, cj] of RIGID_PATTERN) {
      await state.toggleBrace(gridFace(ci, cj))
    }
    expect(state.snapshot().badge).toBe('Rigid')

    await state.toggleBrace(gridFace(1, 0))
    const snapshot = state.snapshot()
    expect(snapshot.badge).toBe('Flexible')
    expect(snapshot.analysis?.bracing_graph.components).toHaveLength(2)
  })

  it('toggling the same face twice leaves the document byte-identical', async () => {
    const api = client()
    const state = new StudioState(api, await api.generateGrid(3, 3))
    await state.analyzeNow()
    const before = documentBytes(state.getDocument())
    await state.toggleBrace(gridFace(1, 1))
    expect(documentBytes(state.getDocument())).not.toBe(before)
    await state.toggleBrace(gridFace(1, 1))
    expect(documentBytes(state.getDocument())).toBe(before)
  })

  it('renders base coordinates at t=0 within 1e-6', async () => {
    const api = client()
    const state = new StudioState(api, await api.generateGrid(3, 3))
    await state.analyzeNow()
    expect(state.snapshot().badge).toBe('Flexible')

    const samples = await state.ensureFlexSamples(32, [0, 2 * Math.PI])
    expect(samples).not.toBeNull()
    state.setT(0)
    const frame = state.frameAt(0)!
    for (const vertex of state.getDocument().vertices) {
      const [x, y] = frame[vertex.id]
      expect(Math.abs(x - vertex.x)).toBeLessThanOrEqual(1e-6)
      expect(Math.abs(y - vertex.y)).toBeLessThanOrEqual(1e-6)
    }
    expect(state.maxEdgeDrift(frame)).toBeLessThanOrEqual(1e-6)
  })

  it('switching coloring index re-fetches the animation', async () => {
    const api = client()
    const state = new StudioState(api, await api.generateGrid(2, 1))
    await state.analyzeNow()
    const first = await state.ensureFlexSamples(8, [0, 1])
    await state.selectColoring(1)
    const second = await state.ensureFlexSamples(8, [0, 1])
    expect(first).not.toBeNull()
    expect(second).not.toBeNull()
    expect(second).not.toBe(first)
    expect(JSON.stringify(second!.response.coloring))
      .not.toBe(JSON.stringify(first!.response.coloring))
  })

  it('accepting suggested braces makes the framework rigid', async () => {
    const api = client()
    const state = new StudioState(api, await api.generateGrid(3, 3))
    await state.analyzeNow()
    expect(state.snapshot().ghostBraces).toHaveLength(5)
    await state.acceptSuggestions()
    expect(state.snapshot().badge).toBe('Rigid')
    expect(state.snapshot().ghostBraces).toHaveLength(0)
  })

  it('undo and redo replay to identical analyze results', async () => {
    const api = client()
    const state = new StudioState(api, await api.generateGrid(2, 2))
    await state.analyzeNow()
    const initial = documentBytes(state.getDocument())
    const initialBadge = state.snapshot().badge

    await state.toggleBrace(gridFace(0, 0))
    const afterToggle = documentBytes(state.getDocument())
    const afterBadge = state.snapshot().badge

    await state.undo()
    expect(documentBytes(state.getDocument())).toBe(initial)
    expect(state.snapshot().badge).toBe(initialBadge)

    await state.redo()
    expect(documentBytes(state.getDocument())).toBe(afterToggle)
    expect(state.snapshot().badge).toBe(afterBadge)
  })
})
