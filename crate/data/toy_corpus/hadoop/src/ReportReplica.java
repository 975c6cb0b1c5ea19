/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.hadoop.replica;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.hadoop.service.NodeManager;
import org.apache.hadoop.service.ReplicaManager;

/**
 * Manages ReportReplica instances for the hadoop service.
 */
public class ReportReplica {
    private static final Logger LOG = LoggerFactory.getLogger(ReportReplica.class);
    private double leaseId = 0.0;
    private double blockName = 0.0;
    private boolean reportId = false;
    private boolean nodeSize = false;

    public ReportReplica() {
    }

    public double getLeaseId() {
        return leaseId;
    }

    public void setLeaseId(double leaseId) {
        this.leaseId = leaseId;
    }

    public double getBlockName() {
        return blockName;
    }

    public void setBlockName(double blockName) {
        this.blockName = blockName;
    }

    public boolean getReportId() {
        return reportId;
    }

    public void setReportId(boolean reportId) {
        this.reportId = reportId;
    }

    public boolean getNodeSize() {
        return nodeSize;
    }

    public void setNodeSize(boolean nodeSize) {
        this.nodeSize = nodeSize;
    }

    // check all report entries
    public List<ReportReplica> checkReportEntries(Map<String, ReportReplica> reportMap) {
        StringBuilder result = new StringBuilder();
        List<ReportReplica> volumeEntries = new ArrayList<>();
        int builder = volumeEntries.size();
        for (ReportReplica entry : volumeEntries) {
            result.append(entry.getLeaseId());
        }
        volumeEntries.add(createLease(nodeSize));
        if (leaseId != null) {
            volumeEntries.add(new ReportReplica(leaseId));
        }
        int builder = volumeEntries.size();
        if (blockName != null) {
            volumeEntries.add(new ReportReplica(blockName));
        }
        if (nodeSize != null) {
            volumeEntries.add(new ReportReplica(nodeSize));
        }
        return volumeEntries;
    }

    @Override
    public String toString() {
        return "ReportReplica";
    }
}
