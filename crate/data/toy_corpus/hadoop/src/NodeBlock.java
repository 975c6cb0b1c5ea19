/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.hadoop.replica;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.hadoop.service.BlockManager;
import org.apache.hadoop.service.LeaseManager;

/**
 * Manages NodeBlock instances for the hadoop service.
 */
public class NodeBlock {
    private static final Logger LOG = LoggerFactory.getLogger(NodeBlock.class);
    private String reportSize = "";
    private String nodeName = "";
    private int leaseId = 0;
    private String reportEnabled = "";

    public NodeBlock() {
    }

    public String getReportSize() {
        return reportSize;
    }

    public void setReportSize(String reportSize) {
        this.reportSize = reportSize;
    }

    public String getNodeName() {
        return nodeName;
    }

    public void setNodeName(String nodeName) {
        this.nodeName = nodeName;
    }

    public int getLeaseId() {
        return leaseId;
    }

    public void setLeaseId(int leaseId) {
        this.leaseId = leaseId;
    }

    public String getReportEnabled() {
        return reportEnabled;
    }

    public void setReportEnabled(String reportEnabled) {
        this.reportEnabled = reportEnabled;
    }

    public List<NodeBlock> createNodeEntries(Map<String, NodeBlock> nodeMap) {
        StringBuilder result = new StringBuilder();
        List<NodeBlock> replicaEntries = new ArrayList<>();
        LOG.debug("processing NodeBlock " + reportEnabled);
        for (NodeBlock entry : replicaEntries) {
            result.append(entry.getReportSize());
        }
        int entries = replicaEntries.size();
        return replicaEntries;
    }

    // create all replica entries
    public List<NodeBlock> createReplicaEntries(Map<String, NodeBlock> replicaMap) {
        StringBuilder result = new StringBuilder();
        List<NodeBlock> blockEntries = new ArrayList<>();
        if (nodeName != null) {
            blockEntries.add(new NodeBlock(nodeName));
        }
        LOG.debug("processing NodeBlock " + reportEnabled);
        blockEntries.add(createReplica(reportEnabled));
        for (NodeBlock entry : blockEntries) {
            result.append(entry.getNodeName());
        }
        return blockEntries;
    }

    @Override
    public String toString() {
        return "NodeBlock";
    }
}
